// End-to-end acceptance gate: one line per criterion, nonzero exit if any
// criterion fails. Every exact claim is checked against brute enumeration or
// a frozen reference value; statistical claims use pinned seeds.
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "derange/bijections.hpp"
#include "derange/cli.hpp"
#include "derange/cycles.hpp"
#include "derange/oracle.hpp"
#include "derange/perm.hpp"
#include "derange/sampling.hpp"
#include "derange/series.hpp"
#include "derange/tables.hpp"

using namespace derange;

namespace {

int failures = 0;

template <typename Fn>
void criterion(int idx, const std::string& label, Fn&& fn) {
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::cout << "FAIL " << idx << ": " << label << " (threw: " << e.what() << ")\n";
    ++failures;
    return;
  }
  std::cout << (ok ? "PASS " : "FAIL ") << idx << ": " << label << "\n";
  failures += !ok;
}

std::string run_cli(const std::vector<std::string>& args, int& exit_code) {
  std::vector<const char*> argv;
  argv.push_back("derange");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  exit_code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Permutation perm_of(const std::string& text) {
  return to_permutation(parse_cycles(text));
}

int largest_of(const std::vector<int>& img) {
  int largest = 0;
  for (int i = 1; i <= static_cast<int>(img.size()); ++i) {
    if (img[static_cast<std::size_t>(i - 1)] == i) largest = i;
  }
  return largest;
}

}  // namespace

int main() {
  criterion(1, "triangle CSV is byte-identical to the golden table", [] {
    int code = 0;
    const std::string out =
        run_cli({"table", "a", "--max-n", "6", "--format", "csv"}, code);
    const CountTriangle a = a_triangle(6);
    return code == 0 && out == slurp(std::string(GOLDEN_DIR) + "/table_a_n6.csv") &&
           a.at(5, 1) == 9 && a.at(6, 2) == 53 && a.at(6, 6) == 120;
  });

  criterion(2, "weighted largest-row sums equal shifted derangement numbers", [] {
    const CountTriangle a = a_triangle(12);
    const DerangementSequence d = derangements_up_to(13);
    for (int n = 1; n <= 12; ++n) {
      if (alpha(n, a) != d.at(n + 1)) return false;
    }
    for (int n = 1; n <= 8; ++n) {
      if (brute_count(n, {CountSpec::Kind::sum_largest, 0}) != alpha(n, a)) {
        return false;
      }
    }
    return true;
  });

  criterion(3, "weighted smallest-row sums count two-fixed-point permutations", [] {
    const CountTriangle b = b_triangle(12);
    for (int n = 1; n <= 12; ++n) {
      if (beta(n, b) != e_count(n + 1)) return false;
    }
    for (int n = 1; n <= 8; ++n) {
      if (brute_count(n, {CountSpec::Kind::sum_smallest, 0}) != beta(n, b)) {
        return false;
      }
    }
    const std::vector<BigInt> first = {1, 1, 7, 31, 191};
    for (int n = 1; n <= 5; ++n) {
      if (beta(n, b) != first[static_cast<std::size_t>(n - 1)]) return false;
    }
    return true;
  });

  criterion(4, "marking maps are bijective on every size through 9", [] {
    for (int m = 2; m <= 9; ++m) {
      if (!all_agree(verify_bijection(m, BijectionKind::phi))) return false;
      if (!all_agree(verify_bijection(m, BijectionKind::psi))) return false;
    }
    // The five worked example pairs, pinned as canonical cycle text.
    const auto mk = [](const MarkedPermutation& m) {
      return to_canonical_cycles(m.perm, m.mark);
    };
    return mk(phi(perm_of("(12,2,4,9,7,5,6)(1,3)(8,11,10)"))) ==
               "(1,3)(2)(4)(5,6,_7)(8,11,10)(9)" &&
           mk(phi(perm_of("(10,2,7,8,3)(1,4,9)(5,6)"))) ==
               "(1,4,9)(2)(_3)(5,6)(7)(8)" &&
           mk(phi(perm_of("(10,2,3,7,8,4,9,1)(5,6)"))) ==
               "(1,_4,9)(2)(3)(5,6)(7)(8)" &&
           mk(psi(perm_of("(3)(10,1,7,2,8)(5)(6)(4,9)"))) ==
               "(1,7,2,8,_3)(4,9)(5)(6)" &&
           mk(psi(perm_of("(5)(10)(6)(3,1,7,2,8)(4,9)"))) ==
               "(1,7,2,8,3)(4,9)(_5)(6)";
  });

  criterion(5, "step map is bijective between adjacent strata through size 7", [] {
    const CountTriangle a = a_triangle(7);
    for (int n = 2; n <= 7; ++n) {
      for (int k = 2; k <= n; ++k) {
        long long domain = 0, same = 0, shrunk = 0;
        std::set<std::pair<int, std::vector<int>>> images;
        bool ok = true;
        for_each_permutation(n, [&](const std::vector<int>& img) {
          if (largest_of(img) != k) return;
          ++domain;
          const StepResult step = ank_step_map(Permutation(img));
          const int out_n = step.kind == StepResult::Kind::same_size ? n : n - 1;
          if (step.perm.size() != out_n || largest_of(step.perm.one_line()) != k - 1) {
            ok = false;
            return;
          }
          (step.kind == StepResult::Kind::same_size ? same : shrunk) += 1;
          images.insert({out_n, step.perm.one_line()});
        });
        if (!ok) return false;
        if (static_cast<long long>(images.size()) != domain) return false;
        if (same != a.at(n, k - 1)) return false;
        if (shrunk != a.at(n - 1, k - 1)) return false;
      }
    }
    return true;
  });

  criterion(6, "new derangement recurrence and the two-case counts hold", [] {
    const DerangementSequence d = derangements_up_to(30);
    for (int n = 1; n <= 30; ++n) {
      if (dn_via_new_recurrence(n, d) != d.at(n)) return false;
    }
    long long case_rows = 0;
    for (const OracleReport& r : full_sweep(8)) {
      if (r.quantity != "case1" && r.quantity != "case2") continue;
      ++case_rows;
      if (!r.agrees) return false;
    }
    return case_rows > 0;
  });

  criterion(7, "generating-function coefficients and product identity", [] {
    const EgfSeries D = egf_derangements(20);
    const DerangementSequence d = derangements_up_to(20);
    for (int n = 0; n <= 20; ++n) {
      if (BigRat(factorial(n)) * D.coeff(n) != BigRat(d.at(n))) return false;
    }
    return egf_identity_check(20);
  });

  criterion(8, "mirror symmetry of the two triangles and the reversal involution", [] {
    const CountTriangle a = a_triangle(12);
    const CountTriangle b = b_triangle(12);
    for (int n = 1; n <= 12; ++n) {
      for (int k = 1; k <= n; ++k) {
        if (b.at(n, k) != a.at(n, n + 1 - k)) return false;
      }
    }
    for (int n = 0; n <= 7; ++n) {
      bool ok = true;
      for_each_permutation(n, [&](const std::vector<int>& img) {
        const Permutation p(img);
        const Permutation rc = reverse_complement(p);
        if (reverse_complement(rc) != p) ok = false;
        const auto ps = fixed_point_stats(p);
        const auto rs = fixed_point_stats(rc);
        if (ps.fixed_points.size() != rs.fixed_points.size()) ok = false;
        if (ps.largest && (!rs.smallest || *rs.smallest != n + 1 - *ps.largest)) {
          ok = false;
        }
        if (ps.smallest && (!rs.largest || *rs.largest != n + 1 - *ps.smallest)) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
    return true;
  });

  criterion(9, "statistical limits sit inside pinned bands for seeds 1..10", [] {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const RngSpec spec{seed, "mt19937-64"};
      const StatSummary largest = estimate_largest_fp_mean(500, 100000, spec);
      if (std::abs(largest.mean - kLargestFixedPointLimit) >= 0.01) return false;
      const StatSummary beta_frac = estimate_beta_fraction(100, 1000000, spec);
      if (std::abs(beta_frac.mean - kBetaFractionLimit) >= 0.005) return false;
      const StatSummary poisson = poisson_conditioned_max(1000000, spec);
      if (std::abs(poisson.z_score) > 3.0) return false;
    }
    return true;
  });

  criterion(10, "exact expected largest fixed point matches enumeration", [] {
    const DerangementSequence d = derangements_up_to(9);
    if (exact_expected_largest(3, d) != BigRat(9, 4)) return false;
    for (int n = 1; n <= 8; ++n) {
      const BigInt sum = brute_count(n, {CountSpec::Kind::sum_largest, 0});
      const BigInt denom = factorial(n) - d.at(n);
      if (exact_expected_largest(n, d) != BigRat(sum, denom)) return false;
    }
    return true;
  });

  return failures == 0 ? 0 : 1;
}
