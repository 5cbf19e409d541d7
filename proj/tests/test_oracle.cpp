#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <tuple>
#include <vector>

#include "derange/error.hpp"
#include "derange/oracle.hpp"
#include "derange/tables.hpp"

using namespace derange;

namespace {

template <typename Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected the call to fail");
  return Errc::usage_error;
}

using ReportKey = std::tuple<std::string, int, int>;  // quantity, n, k (-1 = none)

std::vector<ReportKey> disagreeing(const std::vector<OracleReport>& reports) {
  std::vector<ReportKey> keys;
  for (const OracleReport& r : reports) {
    if (!r.agrees) keys.emplace_back(r.quantity, r.n, r.k.value_or(-1));
  }
  return keys;
}

}  // namespace

TEST_CASE("exhaustive counts hit pinned reference values") {
  CHECK(brute_count(2, {CountSpec::Kind::derangement, 0}) == 1);
  CHECK(brute_count(6, {CountSpec::Kind::largest_is, 2}) == 53);
  CHECK(brute_count(5, {CountSpec::Kind::smallest_is, 1}) == 24);
  CHECK(brute_count(4, {CountSpec::Kind::at_least_two_fixed, 0}) == 7);
  CHECK(brute_count(7, {CountSpec::Kind::sum_largest, 0}) == 14833);
  CHECK(brute_count(5, {CountSpec::Kind::sum_smallest, 0}) == 191);
}

TEST_CASE("enumerated derangement counts reproduce the recurrence values") {
  const DerangementSequence d = derangements_up_to(8);
  for (int n = 0; n <= 8; ++n) {
    CHECK(brute_count(n, {CountSpec::Kind::derangement, 0}) == d.at(n));
  }
}

TEST_CASE("the full sweep agrees with every closed form") {
  const std::vector<OracleReport> reports = full_sweep(8);
  CHECK(all_agree(reports));
  CHECK(disagreeing(reports).empty());

  // Spot-check that the sweep actually contains the advertised quantities.
  bool saw_a62 = false, saw_case2 = false;
  for (const OracleReport& r : reports) {
    if (r.quantity == "a" && r.n == 6 && r.k == 2) {
      saw_a62 = true;
      CHECK(r.brute_value == 53);
      CHECK(r.formula_value == 53);
    }
    if (r.quantity == "case2" && r.n == 6 && r.k == 2) {
      saw_case2 = true;
      // 2 * C(5,3) * d_3 = 2 * 10 * 2
      CHECK(r.brute_value == 40);
    }
  }
  CHECK(saw_a62);
  CHECK(saw_case2);
}

TEST_CASE("enumeration order does not change any report") {
  CHECK(reports_csv(full_sweep(5, EnumOrder::lex_descending)) ==
        reports_csv(full_sweep(5)));
}

TEST_CASE("largest-mark bijection verifies exhaustively through size 9") {
  for (int m = 2; m <= 9; ++m) {
    const std::vector<OracleReport> reports = verify_bijection(m, BijectionKind::phi);
    REQUIRE(reports.size() == 3);
    CHECK(all_agree(reports));
    CHECK(reports[0].quantity == "d");
    CHECK(reports[1].quantity == "alpha");
    CHECK(reports[2].quantity == "phi");
  }
  const std::vector<OracleReport> at9 = verify_bijection(9, BijectionKind::phi);
  CHECK(at9[0].brute_value == 133496);   // derangements of [9], counted one by one
  CHECK(at9[1].brute_value == 133496);   // marked permutations of [8]
  CHECK(at9[2].brute_value == 133496);   // distinct verified round trips
}

TEST_CASE("smallest-mark bijection verifies exhaustively through size 9") {
  for (int m = 2; m <= 9; ++m) {
    const std::vector<OracleReport> reports = verify_bijection(m, BijectionKind::psi);
    REQUIRE(reports.size() == 3);
    CHECK(all_agree(reports));
    CHECK(reports[0].quantity == "e_count");
    CHECK(reports[1].quantity == "beta");
    CHECK(reports[2].quantity == "psi");
  }
  const std::vector<OracleReport> at4 = verify_bijection(4, BijectionKind::psi);
  CHECK(at4[0].brute_value == 7);
  const std::vector<OracleReport> at9 = verify_bijection(9, BijectionKind::psi);
  CHECK(at9[0].brute_value == 95887);  // 9! - d_9 - 9*d_8
}

TEST_CASE("a corrupted table is pinpointed, not silently accepted") {
  const int N = 6;
  const CountTriangle b = b_triangle(N);
  const DerangementSequence d = derangements_up_to(N);
  auto rows = a_triangle(N).rows();
  rows[3][1] += 1;  // poison a(4,2)
  const CountTriangle corrupted(rows);

  const std::vector<OracleReport> reports = full_sweep(N, corrupted, b, d);
  CHECK(!all_agree(reports));
  // Both the poisoned cell and the weighted row sum that reads it must trip.
  const std::vector<ReportKey> expected = {{"a", 4, 2}, {"alpha", 4, -1}};
  CHECK(disagreeing(reports) == expected);
  for (const OracleReport& r : reports) {
    if (r.quantity == "a" && r.n == 4 && r.k == 2) {
      CHECK(r.formula_value == r.brute_value + 1);
    }
  }
}

TEST_CASE("oracle size limits and spec validation") {
  CHECK(code_of([] { brute_count(10, {CountSpec::Kind::derangement, 0}); }) ==
        Errc::size_too_large);
  CHECK(code_of([] { brute_count(-1, {CountSpec::Kind::derangement, 0}); }) ==
        Errc::size_too_large);
  CHECK(code_of([] { full_sweep(10); }) == Errc::size_too_large);
  CHECK(code_of([] { verify_bijection(1, BijectionKind::phi); }) ==
        Errc::size_too_small);
  CHECK(code_of([] { verify_bijection(10, BijectionKind::phi); }) ==
        Errc::size_too_large);
  CHECK(code_of([] {
          brute_count(3, {static_cast<CountSpec::Kind>(99), 0});
        }) == Errc::unknown_spec);
}

TEST_CASE("report serialization is byte-stable") {
  OracleReport plain;
  plain.quantity = "d";
  plain.n = 4;
  plain.brute_value = 9;
  plain.formula_value = 9;
  plain.agrees = true;

  OracleReport mismatch;
  mismatch.quantity = "a";
  mismatch.n = 4;
  mismatch.k = 2;
  mismatch.brute_value = 3;
  mismatch.formula_value = 4;
  mismatch.agrees = false;

  CHECK(reports_csv({plain, mismatch}) ==
        "quantity,n,k,brute,formula,agrees\n"
        "d,4,,9,9,true\n"
        "a,4,2,3,4,false\n");
  CHECK(reports_csv({}) == "quantity,n,k,brute,formula,agrees\n");
}
