#pragma once

#include <vector>

#include "derange/bigint.hpp"
#include "derange/error.hpp"

namespace derange {

// Truncated power series sum c_k x^k up to a fixed degree, with exact
// rational coefficients. Arithmetic never lets dropped terms leak into the
// kept coefficients, so a degree-N result is the exact truncation of the
// full product/sum.
class EgfSeries {
 public:
  explicit EgfSeries(int degree);  // zero series
  explicit EgfSeries(std::vector<BigRat> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRat& coeff(int k) const;  // RangeError outside [0..degree]

  EgfSeries operator+(const EgfSeries& rhs) const;
  EgfSeries operator-(const EgfSeries& rhs) const;
  EgfSeries operator*(const EgfSeries& rhs) const;  // Cauchy product, truncated

  // Multiplication by x: shifts coefficients up, drops the old top term.
  EgfSeries shifted_up() const;

  bool operator==(const EgfSeries&) const = default;

 private:
  std::vector<BigRat> coeffs_;
};

EgfSeries constant_series(const BigRat& c, int degree);
EgfSeries exp_series(const BigRat& a, int degree);  // e^{a x}
EgfSeries geometric_series(int degree);             // 1/(1-x)

// D(x) = e^{-x}/(1-x); n! * coeff(n) = d_n. Division by (1-x) is carried out
// as multiplication by the truncated geometric series.
EgfSeries egf_derangements(int N);

// True iff D(x) * (x e^x - e^x + 1) == D(x) - 1 coefficientwise up to N.
bool egf_identity_check(int N);

}  // namespace derange
