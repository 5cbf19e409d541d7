#include "derange/bijections.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "derange/error.hpp"

namespace derange {
namespace {

// Index (1-based) of the element mapping to target, i.e. p^{-1}(target).
int preimage_of(const Permutation& p, int target) {
  for (int e = 1; e <= p.size(); ++e) {
    if (p(e) == target) return e;
  }
  fail(Errc::range_error, "no preimage of " + std::to_string(target));
}

int checked_marked_size(int n, int size_cap) {
  if (n < 1) {
    fail(Errc::size_too_small,
         "marked enumeration needs n >= 1, got " + std::to_string(n));
  }
  if (n > size_cap) {
    fail(Errc::size_too_large, "marked enumeration size " + std::to_string(n) +
                                   " exceeds cap " + std::to_string(size_cap));
  }
  return n;
}

}  // namespace

void validate_marked(const MarkedPermutation& m) {
  const int n = m.perm.size();
  if (m.mark < 1 || m.mark > n) {
    fail(Errc::invariant_violation,
         "mark " + std::to_string(m.mark) + " outside [1.." + std::to_string(n) + "]");
  }
  const FixedPointStats stats = fixed_point_stats(m.perm);
  if (!stats.largest.has_value()) {
    fail(Errc::invariant_violation, "marked permutation is a derangement");
  }
  const bool is_largest = m.mode == MarkMode::largest;
  const int bound = is_largest ? *stats.largest : *stats.smallest;
  if (m.mark > bound) {
    fail(Errc::invariant_violation,
         "mark " + std::to_string(m.mark) + " exceeds " +
             (is_largest ? "largest" : "smallest") + " fixed point " +
             std::to_string(bound));
  }
}

MarkedPermutation phi(const Permutation& p) {
  const int big = p.size();  // the element n+1
  if (big < 2) {
    fail(Errc::size_too_small,
         "phi needs size >= 2, got " + std::to_string(big));
  }
  if (!is_derangement(p)) {
    fail(Errc::not_derangement, "phi requires a derangement");
  }

  // Cycle of n+1, written (n+1, i_1, ..., i_r); r >= 1 since n+1 is moved.
  const std::vector<int> tail = cycle_tail_from(p, big);
  const int r = static_cast<int>(tail.size());
  int q = 1;  // longest strictly increasing prefix of the tail
  while (q < r && tail[static_cast<std::size_t>(q - 1)] < tail[static_cast<std::size_t>(q)]) {
    ++q;
  }

  std::vector<int> image(p.one_line().begin(), p.one_line().end() - 1);
  for (int j = 0; j < q; ++j) {
    const int e = tail[static_cast<std::size_t>(j)];
    image[static_cast<std::size_t>(e - 1)] = e;  // i_1..i_q become fixed
  }
  for (int j = q; j < r; ++j) {  // (i_{q+1}, ..., i_r) stays a cycle
    const int e = tail[static_cast<std::size_t>(j)];
    const int succ = tail[static_cast<std::size_t>(j + 1 == r ? q : j + 1)];
    image[static_cast<std::size_t>(e - 1)] = succ;
  }
  const int mark = tail[static_cast<std::size_t>(q == r ? r - 1 : q)];
  return MarkedPermutation{Permutation(std::move(image)), mark, MarkMode::largest};
}

Permutation phi_inv(const MarkedPermutation& m) {
  if (m.mode != MarkMode::largest) {
    fail(Errc::invariant_violation, "phi_inv requires largest-mode input");
  }
  validate_marked(m);

  const int n = m.perm.size();
  const int big = n + 1;
  // New top cycle: n+1, then the unmarked fixed points ascending, then the
  // cycle of the mark read forward from it.
  std::vector<int> chain{big};
  for (int fp : fixed_point_stats(m.perm).fixed_points) {
    if (fp != m.mark) chain.push_back(fp);
  }
  chain.push_back(m.mark);
  const std::vector<int> marked_tail = cycle_tail_from(m.perm, m.mark);
  chain.insert(chain.end(), marked_tail.begin(), marked_tail.end());

  std::vector<int> image(m.perm.one_line());
  image.push_back(big);
  const int len = static_cast<int>(chain.size());
  for (int j = 0; j < len; ++j) {
    const int e = chain[static_cast<std::size_t>(j)];
    image[static_cast<std::size_t>(e - 1)] = chain[static_cast<std::size_t>((j + 1) % len)];
  }
  return Permutation(std::move(image));
}

MarkedPermutation psi(const Permutation& p) {
  const FixedPointStats stats = fixed_point_stats(p);
  if (stats.fixed_points.size() < 2) {
    fail(Errc::too_few_fixed_points,
         "psi needs at least two fixed points, got " +
             std::to_string(stats.fixed_points.size()));
  }
  const int big = p.size();
  const int i = *stats.smallest;  // i < big since two fixed points exist

  std::vector<int> image(p.one_line().begin(), p.one_line().end() - 1);
  if (p(big) != big) {
    // i takes the place of n+1 inside its cycle.
    image[static_cast<std::size_t>(i - 1)] = p(big);
    image[static_cast<std::size_t>(preimage_of(p, big) - 1)] = i;
  }
  return MarkedPermutation{Permutation(std::move(image)), i, MarkMode::smallest};
}

Permutation psi_inv(const MarkedPermutation& m) {
  if (m.mode != MarkMode::smallest) {
    fail(Errc::invariant_violation, "psi_inv requires smallest-mode input");
  }
  validate_marked(m);

  const int n = m.perm.size();
  const int big = n + 1;
  const int i = m.mark;
  std::vector<int> image(m.perm.one_line());
  image.push_back(big);
  if (m.perm(i) != i) {
    // n+1 takes the place of i inside its cycle; i becomes fixed again.
    image[static_cast<std::size_t>(big - 1)] = m.perm(i);
    image[static_cast<std::size_t>(preimage_of(m.perm, i) - 1)] = big;
    image[static_cast<std::size_t>(i - 1)] = i;
  }
  return Permutation(std::move(image));
}

MarkedStream::MarkedStream(int n, MarkMode mode, int size_cap)
    : perms_(checked_marked_size(n, size_cap), EnumOrder::lex_ascending, n),
      mode_(mode) {
  advance_perm();
}

void MarkedStream::advance_perm() {
  for (;;) {
    current_ = perms_.next();
    if (!current_.has_value()) return;
    const FixedPointStats stats = fixed_point_stats(*current_);
    if (!stats.largest.has_value()) continue;  // derangements carry no mark
    bound_ = mode_ == MarkMode::largest ? *stats.largest : *stats.smallest;
    next_mark_ = 1;
    return;
  }
}

std::optional<MarkedPermutation> MarkedStream::next() {
  while (current_.has_value()) {
    if (next_mark_ <= bound_) {
      return MarkedPermutation{*current_, next_mark_++, mode_};
    }
    advance_perm();
  }
  return std::nullopt;
}

}  // namespace derange
