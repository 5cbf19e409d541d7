#pragma once

#include <string>
#include <vector>

#include "derange/bigint.hpp"
#include "derange/error.hpp"
#include "derange/perm.hpp"

namespace derange {

BigInt factorial(int n);
BigInt binomial(int n, int k);  // 0 outside 0 <= k <= n

// d_0..d_N with d_0 = 1, d_1 = 0, d_n = n*d_{n-1} + (-1)^n.
class DerangementSequence {
 public:
  explicit DerangementSequence(std::vector<BigInt> values);

  int max_n() const { return static_cast<int>(values_.size()) - 1; }
  const BigInt& at(int n) const;  // RangeError outside [0..max_n]
  const std::vector<BigInt>& values() const { return values_; }

 private:
  std::vector<BigInt> values_;
};

DerangementSequence derangements_up_to(int N);

// Triangular array of exact counts indexed (n, k), 1 <= k <= n <= max_n.
class CountTriangle {
 public:
  explicit CountTriangle(std::vector<std::vector<BigInt>> rows);

  int max_n() const { return static_cast<int>(rows_.size()); }
  const BigInt& at(int n, int k) const;  // RangeError outside the triangle
  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// a_{n,k} = |{pi in S_n : l(pi) = k}| via the prefix-sum construction
// a_{n,k} = d_{n-1} + sum_{j<k} a_{n-1,j}, built with one running cumulative
// sum per row.
CountTriangle a_triangle(int N);

// Same triangle from the difference-table recurrence, seeded independently:
// a_{n,n} = (n-1)! and a_{n,k} = a_{n,k+1} - a_{n-1,k} going down each row.
CountTriangle a_triangle_by_recurrence(int N);

// b_{n,k} = |{pi in S_n : s(pi) = k}| = a_{n,n+1-k}.
CountTriangle b_triangle(int N);

// alpha_n = sum_k k*a_{n,k}; pass the a-triangle.
BigInt alpha(int n, const CountTriangle& a);

// beta_n = sum_k k*b_{n,k}; pass the b-triangle.
BigInt beta(int n, const CountTriangle& b);

// Number of permutations of [m] with at least two fixed points:
// m! - d_m - m*d_{m-1}.
BigInt e_count(int m);

// sum_{j=2..n} (j-1) * C(n,j) * d_{n-j}; equals d_n (empty sum at n = 1).
BigInt dn_via_new_recurrence(int n, const DerangementSequence& d);

// Writing a derangement as (n, i_1, ..., i_r) * sigma, exactly one of:
// case one, i_1 < ... < i_{r-1} (vacuous for r <= 2), indexed by r; or
// case two, first descent i_q > i_{q+1} inside the prefix, indexed by q.
struct DecompositionClass {
  enum class Case { one, two };
  Case which;
  int index;  // r for case one, q for case two

  bool operator==(const DecompositionClass&) const = default;
};

DecompositionClass classify_derangement(const Permutation& p);

// CSV/JSON export: rows in (n asc, k asc) order, values as plain decimal.
std::string triangle_csv(const CountTriangle& t);
std::string triangle_json(const CountTriangle& t);

}  // namespace derange
