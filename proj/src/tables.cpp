#include "derange/tables.hpp"

#include <utility>

#include <json.hpp>

namespace derange {

BigInt factorial(int n) {
  if (n < 0) fail(Errc::range_error, "factorial of negative " + std::to_string(n));
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

DerangementSequence::DerangementSequence(std::vector<BigInt> values)
    : values_(std::move(values)) {
  if (values_.empty()) fail(Errc::range_error, "empty derangement sequence");
}

const BigInt& DerangementSequence::at(int n) const {
  if (n < 0 || n > max_n()) {
    fail(Errc::range_error, "d_" + std::to_string(n) + " outside [0.." +
                                std::to_string(max_n()) + "]");
  }
  return values_[static_cast<std::size_t>(n)];
}

DerangementSequence derangements_up_to(int N) {
  if (N < 0) fail(Errc::range_error, "negative sequence length");
  std::vector<BigInt> d(static_cast<std::size_t>(N) + 1);
  d[0] = 1;
  for (int n = 1; n <= N; ++n) {
    d[static_cast<std::size_t>(n)] =
        n * d[static_cast<std::size_t>(n - 1)] + (n % 2 == 0 ? 1 : -1);
  }
  return DerangementSequence(std::move(d));
}

CountTriangle::CountTriangle(std::vector<std::vector<BigInt>> rows)
    : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != i + 1) {
      fail(Errc::invariant_violation, "triangle row " + std::to_string(i + 1) +
                                          " must have " + std::to_string(i + 1) + " entries");
    }
  }
}

const BigInt& CountTriangle::at(int n, int k) const {
  if (n < 1 || n > max_n() || k < 1 || k > n) {
    fail(Errc::range_error, "(n,k) = (" + std::to_string(n) + "," + std::to_string(k) +
                                ") outside the triangle of size " + std::to_string(max_n()));
  }
  return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
}

CountTriangle a_triangle(int N) {
  if (N < 1) fail(Errc::range_error, "triangle size must be >= 1");
  const auto d = derangements_up_to(N - 1);
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(static_cast<std::size_t>(N));
  rows.push_back({BigInt(1)});
  for (int n = 2; n <= N; ++n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(static_cast<std::size_t>(n));
    row[0] = d.at(n - 1);
    BigInt cum = 0;
    for (int k = 2; k <= n; ++k) {
      cum += prev[static_cast<std::size_t>(k - 2)];
      row[static_cast<std::size_t>(k - 1)] = d.at(n - 1) + cum;
    }
    rows.push_back(std::move(row));
  }
  return CountTriangle(std::move(rows));
}

CountTriangle a_triangle_by_recurrence(int N) {
  if (N < 1) fail(Errc::range_error, "triangle size must be >= 1");
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(static_cast<std::size_t>(N));
  rows.push_back({BigInt(1)});
  for (int n = 2; n <= N; ++n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(static_cast<std::size_t>(n));
    row[static_cast<std::size_t>(n - 1)] = factorial(n - 1);
    for (int k = n - 1; k >= 1; --k) {
      row[static_cast<std::size_t>(k - 1)] =
          row[static_cast<std::size_t>(k)] - prev[static_cast<std::size_t>(k - 1)];
    }
    rows.push_back(std::move(row));
  }
  return CountTriangle(std::move(rows));
}

CountTriangle b_triangle(int N) {
  const auto a = a_triangle(N);
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
      row[static_cast<std::size_t>(k - 1)] = a.at(n, n + 1 - k);
    }
    rows.push_back(std::move(row));
  }
  return CountTriangle(std::move(rows));
}

namespace {

BigInt weighted_row_sum(int n, const CountTriangle& t) {
  if (n < 1 || n > t.max_n()) {
    fail(Errc::range_error, "row " + std::to_string(n) + " outside triangle of size " +
                                std::to_string(t.max_n()));
  }
  BigInt sum = 0;
  for (int k = 1; k <= n; ++k) sum += k * t.at(n, k);
  return sum;
}

}  // namespace

BigInt alpha(int n, const CountTriangle& a) { return weighted_row_sum(n, a); }

BigInt beta(int n, const CountTriangle& b) { return weighted_row_sum(n, b); }

BigInt e_count(int m) {
  if (m < 1) fail(Errc::range_error, "e_count requires m >= 1");
  const auto d = derangements_up_to(m);
  return factorial(m) - d.at(m) - m * d.at(m - 1);
}

BigInt dn_via_new_recurrence(int n, const DerangementSequence& d) {
  if (n < 1 || n > d.max_n()) {
    fail(Errc::range_error, "n = " + std::to_string(n) + " outside [1.." +
                                std::to_string(d.max_n()) + "]");
  }
  BigInt sum = 0;
  for (int j = 2; j <= n; ++j) {
    sum += (j - 1) * binomial(n, j) * d.at(n - j);
  }
  return sum;
}

DecompositionClass classify_derangement(const Permutation& p) {
  const int n = p.size();
  if (n < 2) fail(Errc::size_too_small, "classification requires n >= 2");
  if (!is_derangement(p)) fail(Errc::not_derangement, "input has a fixed point");
  const auto tail = cycle_tail_from(p, n);  // (i_1, ..., i_r)
  const int r = static_cast<int>(tail.size());
  for (int q = 1; q <= r - 2; ++q) {
    if (tail[static_cast<std::size_t>(q - 1)] > tail[static_cast<std::size_t>(q)]) {
      return {DecompositionClass::Case::two, q};
    }
  }
  return {DecompositionClass::Case::one, r};
}

std::string triangle_csv(const CountTriangle& t) {
  std::string out = "n,k,value\n";
  for (int n = 1; n <= t.max_n(); ++n) {
    for (int k = 1; k <= n; ++k) {
      out += std::to_string(n);
      out += ',';
      out += std::to_string(k);
      out += ',';
      out += t.at(n, k).str();
      out += '\n';
    }
  }
  return out;
}

std::string triangle_json(const CountTriangle& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int n = 1; n <= t.max_n(); ++n) {
    for (int k = 1; k <= n; ++k) {
      arr.push_back({{"n", n}, {"k", k}, {"value", t.at(n, k).str()}});
    }
  }
  return arr.dump();
}

}  // namespace derange
