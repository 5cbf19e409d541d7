#pragma once

#include <optional>
#include <string>
#include <vector>

#include "derange/perm.hpp"

namespace derange {

// Disjoint-cycle representation covering {1..n} exactly; fixed points appear
// as 1-cycles. At most one element carries a mark; the mark names an element,
// not a position.
struct CycleForm {
  std::vector<std::vector<int>> cycles;
  std::optional<int> mark;

  int n() const;

  bool operator==(const CycleForm&) const = default;
};

// Grammar:  perm := cycle+ ; cycle := '(' elem (',' elem)* ')' ; elem := '_'? uint
// Whitespace is permitted between tokens. The parsed cycles must cover {1..n}
// with n the maximum element; omitted fixed points are an error.
CycleForm parse_cycles(const std::string& text);

// pi(a) = b iff b follows a cyclically in some cycle. Validates coverage; the
// mark is dropped.
Permutation to_permutation(const CycleForm& c);

// Canonical form: each cycle rotated so its minimum element leads, cycles
// sorted by minimum, fixed points as 1-cycles.
CycleForm to_cycles(const Permutation& p, std::optional<int> mark = std::nullopt);

// Serializes the canonical form, rendering the mark as a '_' prefix.
// parse_cycles(to_canonical_cycles(p, mark)) reproduces (p, mark) for n >= 1.
std::string to_canonical_cycles(const Permutation& p,
                                std::optional<int> mark = std::nullopt);

// Serializes a CycleForm as-is (no reordering).
std::string format_cycles(const CycleForm& c);

}  // namespace derange
