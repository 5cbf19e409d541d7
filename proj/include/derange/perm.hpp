#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "derange/error.hpp"

namespace derange {

// Default cap on exhaustive enumeration (10! = 3.6M items).
inline constexpr int kEnumerationCap = 10;

// A permutation of {1..n} stored as its one-line image: one_line()[i-1] = pi(i).
// n = 0 is the empty permutation and counts as a derangement.
class Permutation {
 public:
  Permutation() = default;

  // Validates that the image is a bijection of {1..n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }

  // pi(i), 1-based; i must be in [1..n].
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& one_line() const { return image_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

struct FixedPointStats {
  std::vector<int> fixed_points;  // strictly increasing
  std::optional<int> largest;     // l(pi); absent for derangements
  std::optional<int> smallest;    // s(pi)
};

FixedPointStats fixed_point_stats(const Permutation& p);

bool is_derangement(const Permutation& p);

// The involution pi'(i) = n+1-pi(n+1-i). Equivalently: relabel every element
// e as n+1-e inside the cycle form. Swaps the roles of l(pi) and s(pi):
// s(pi') = n+1-l(pi) whenever pi has a fixed point.
Permutation reverse_complement(const Permutation& p);

// Elements of the cycle containing e, read forward from e, excluding e.
// Empty when e is a fixed point.
std::vector<int> cycle_tail_from(const Permutation& p, int e);

// One step of the map behind a_{n,k} = a_{n,k-1} + a_{n-1,k-1}. Requires a
// non-derangement with largest fixed point k >= 2; the result has largest
// fixed point k-1 and lives in S_n (pi(1) != 1) or S_{n-1} (pi(1) = 1).
struct StepResult {
  enum class Kind { same_size, shrunk };
  Kind kind;
  Permutation perm;
};

StepResult ank_step_map(const Permutation& p);

enum class EnumOrder { lex_ascending, lex_descending };

// Yields each of the n! permutations of [n] exactly once, lexicographic by
// one-line form. Single consumer.
class PermutationStream {
 public:
  explicit PermutationStream(int n, EnumOrder order = EnumOrder::lex_ascending,
                             int size_cap = kEnumerationCap);

  std::optional<Permutation> next();

 private:
  std::vector<int> current_;
  EnumOrder order_ = EnumOrder::lex_ascending;
  bool pending_first_ = true;
  bool exhausted_ = false;
};

// Invokes fn(one_line) for every permutation of [n]; fn sees a reused buffer.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn,
                          EnumOrder order = EnumOrder::lex_ascending,
                          int size_cap = kEnumerationCap) {
  if (n < 0 || n > size_cap) {
    fail(Errc::size_too_large, "enumeration size " + std::to_string(n) +
                                   " outside [0.." + std::to_string(size_cap) + "]");
  }
  std::vector<int> buf(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    buf[static_cast<std::size_t>(i)] = order == EnumOrder::lex_ascending ? i + 1 : n - i;
  }
  for (;;) {
    fn(static_cast<const std::vector<int>&>(buf));
    const bool more = order == EnumOrder::lex_ascending
                          ? std::next_permutation(buf.begin(), buf.end())
                          : std::prev_permutation(buf.begin(), buf.end());
    if (!more) break;
  }
}

}  // namespace derange
