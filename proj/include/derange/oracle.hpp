#pragma once

#include <optional>
#include <string>
#include <vector>

#include "derange/bigint.hpp"
#include "derange/perm.hpp"
#include "derange/tables.hpp"

namespace derange {

// Cap on oracle enumeration; 9! = 362880 permutations per sweep level.
inline constexpr int kOracleCap = 9;

// What to count (or sum) over S_n by exhaustive enumeration.
struct CountSpec {
  enum class Kind {
    derangement,         // no fixed point
    largest_is,          // l(pi) = k among permutations with a fixed point
    smallest_is,         // s(pi) = k
    at_least_two_fixed,  // two or more fixed points
    sum_largest,         // sum of l(pi) over non-derangements
    sum_smallest,        // sum of s(pi) over non-derangements
  };

  Kind kind;
  int k = 0;  // only read by largest_is / smallest_is
};

// One brute-vs-formula comparison. The quantity tag is one of: d, a, b,
// alpha, beta, e_count, case1, case2, phi, psi; k carries the column (a, b),
// the cycle-tail length r (case1), or the descent position q (case2).
struct OracleReport {
  std::string quantity;
  int n = 0;
  std::optional<int> k;
  BigInt brute_value;
  BigInt formula_value;
  bool agrees = false;
};

// Exhaustive count over S_n; never consults the closed-form tables.
BigInt brute_count(int n, const CountSpec& spec,
                   EnumOrder order = EnumOrder::lex_ascending,
                   int size_cap = kOracleCap);

enum class BijectionKind { phi, psi };

// Applies the forward map to every domain element of S_{n_plus_1} and checks
// image validity, distinctness, round trips, and coverage of the enumerated
// codomain. Emits three reports: the domain cardinality against the closed
// form (d or e_count), the codomain cardinality against alpha or beta, and
// the verified-pair count against the codomain size. Any map failure lowers
// the verified count instead of throwing.
std::vector<OracleReport> verify_bijection(int n_plus_1, BijectionKind which,
                                           int size_cap = kOracleCap);

// Brute-recomputes every counted quantity for n = 1..max_n against the
// supplied tables: d, a(n,k), b(n,k), alpha, beta, e_count, and the
// per-class derangement decomposition counts case1(r), case2(q).
std::vector<OracleReport> full_sweep(int max_n, const CountTriangle& a,
                                     const CountTriangle& b,
                                     const DerangementSequence& d,
                                     EnumOrder order = EnumOrder::lex_ascending,
                                     int size_cap = kOracleCap);

// Same, with the tables built in place from the closed forms.
std::vector<OracleReport> full_sweep(int max_n,
                                     EnumOrder order = EnumOrder::lex_ascending,
                                     int size_cap = kOracleCap);

bool all_agree(const std::vector<OracleReport>& reports);

// Header `quantity,n,k,brute,formula,agrees`; k empty when absent; agrees
// rendered as true/false.
std::string reports_csv(const std::vector<OracleReport>& reports);

}  // namespace derange
