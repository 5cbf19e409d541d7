#pragma once

#include <optional>

#include "derange/perm.hpp"

namespace derange {

// Cap on exhaustive marked-pair enumeration (9! * 9 is still cheap).
inline constexpr int kMarkedCap = 9;

// Which fixed-point statistic bounds the mark.
enum class MarkMode { largest, smallest };

// A non-derangement of [n] together with a marked element. In largest mode
// the mark must not exceed l(perm); in smallest mode it must not exceed
// s(perm). The mark names an element, not a position, and it need not be a
// fixed point.
struct MarkedPermutation {
  Permutation perm;
  int mark = 0;
  MarkMode mode = MarkMode::largest;

  bool operator==(const MarkedPermutation&) const = default;
};

// Throws invariant_violation naming the first violated condition: mark out of
// [1..n], perm a derangement, or mark above the mode's fixed-point bound.
void validate_marked(const MarkedPermutation& m);

// Sends a derangement p of [n+1] to a marked non-derangement of [n]. Write
// the cycle of n+1 as (n+1, i_1, ..., i_r) and let q be maximal with
// i_1 < ... < i_q. The elements i_1..i_q become fixed points; the remainder
// (i_{q+1}, ..., i_r) stays a cycle; the mark is i_{q+1} (or i_r when q = r).
// Everything outside the cycle of n+1 is untouched.
MarkedPermutation phi(const Permutation& p);

// Inverse of phi. Chains n+1, the unmarked fixed points in increasing order,
// and the cycle opened at the mark into a single cycle; the rest is untouched.
Permutation phi_inv(const MarkedPermutation& m);

// Sends a permutation p of [n+1] with at least two fixed points to a marked
// non-derangement of [n]: conjugate by the transposition (i, n+1), where i is
// the smallest fixed point, drop the resulting fixed point n+1, and mark i.
// Concretely, i takes the place of n+1 in its cycle.
MarkedPermutation psi(const Permutation& p);

// Inverse of psi: re-insert n+1 in place of the marked element i, and make i
// a fixed point again. The result has at least two fixed points.
Permutation psi_inv(const MarkedPermutation& m);

// Yields every valid (perm, mark) pair on [n] exactly once, ordered by perm
// (lexicographic one-line) and then by mark. Single consumer.
class MarkedStream {
 public:
  explicit MarkedStream(int n, MarkMode mode, int size_cap = kMarkedCap);

  std::optional<MarkedPermutation> next();

 private:
  PermutationStream perms_;
  MarkMode mode_;
  std::optional<Permutation> current_;
  int bound_ = 0;      // l or s of current_, per mode
  int next_mark_ = 1;  // 1..bound_

  void advance_perm();
};

}  // namespace derange
