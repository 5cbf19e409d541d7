#include "derange/perm.hpp"

#include <numeric>

namespace derange {

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      fail(Errc::invariant_violation,
           "one-line image is not a permutation of {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) fail(Errc::invariant_violation, "negative permutation size");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

FixedPointStats fixed_point_stats(const Permutation& p) {
  FixedPointStats stats;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i) stats.fixed_points.push_back(i);
  }
  if (!stats.fixed_points.empty()) {
    stats.smallest = stats.fixed_points.front();
    stats.largest = stats.fixed_points.back();
  }
  return stats;
}

bool is_derangement(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i) return false;
  }
  return true;
}

Permutation reverse_complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    img[static_cast<std::size_t>(i - 1)] = n + 1 - p(n + 1 - i);
  }
  return Permutation(std::move(img));
}

std::vector<int> cycle_tail_from(const Permutation& p, int e) {
  if (e < 1 || e > p.size()) {
    fail(Errc::range_error, "element " + std::to_string(e) + " outside [1.." +
                                std::to_string(p.size()) + "]");
  }
  std::vector<int> tail;
  for (int x = p(e); x != e; x = p(x)) tail.push_back(x);
  return tail;
}

StepResult ank_step_map(const Permutation& p) {
  const auto stats = fixed_point_stats(p);
  if (stats.fixed_points.empty()) {
    fail(Errc::is_derangement, "ank_step_map requires a non-derangement");
  }
  if (*stats.largest == 1) {
    fail(Errc::largest_fixed_point_is_one,
         "ank_step_map is undefined when the largest fixed point is 1");
  }
  const int n = p.size();
  const auto& img = p.one_line();
  if (img[0] == 1) {
    // Drop the leading fixed point and renumber.
    std::vector<int> out(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) out[static_cast<std::size_t>(i - 1)] = img[static_cast<std::size_t>(i)] - 1;
    return {StepResult::Kind::shrunk, Permutation(std::move(out))};
  }
  // Move pi(1) to the end, replace the entry 1 with n+1, subtract one.
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    int v = img[static_cast<std::size_t>(i)];
    if (v == 1) v = n + 1;
    out[static_cast<std::size_t>(i - 1)] = v - 1;
  }
  out[static_cast<std::size_t>(n - 1)] = img[0] - 1;
  return {StepResult::Kind::same_size, Permutation(std::move(out))};
}

PermutationStream::PermutationStream(int n, EnumOrder order, int size_cap)
    : order_(order) {
  if (n < 0 || n > size_cap) {
    fail(Errc::size_too_large, "enumeration size " + std::to_string(n) +
                                   " outside [0.." + std::to_string(size_cap) + "]");
  }
  current_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    current_[static_cast<std::size_t>(i)] = order == EnumOrder::lex_ascending ? i + 1 : n - i;
  }
}

std::optional<Permutation> PermutationStream::next() {
  if (exhausted_) return std::nullopt;
  if (pending_first_) {
    pending_first_ = false;
  } else {
    const bool more = order_ == EnumOrder::lex_ascending
                          ? std::next_permutation(current_.begin(), current_.end())
                          : std::prev_permutation(current_.begin(), current_.end());
    if (!more) {
      exhausted_ = true;
      return std::nullopt;
    }
  }
  return Permutation(current_);
}

}  // namespace derange
