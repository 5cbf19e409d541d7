#include "derange/series.hpp"

#include <utility>

namespace derange {
namespace {

void require_same_degree(const EgfSeries& a, const EgfSeries& b) {
  if (a.degree() != b.degree()) {
    fail(Errc::range_error, "series degrees differ: " + std::to_string(a.degree()) +
                                " vs " + std::to_string(b.degree()));
  }
}

}  // namespace

EgfSeries::EgfSeries(int degree) {
  if (degree < 0) fail(Errc::range_error, "negative series degree");
  coeffs_.resize(static_cast<std::size_t>(degree) + 1);
}

EgfSeries::EgfSeries(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(Errc::range_error, "series needs at least degree 0");
}

const BigRat& EgfSeries::coeff(int k) const {
  if (k < 0 || k > degree()) {
    fail(Errc::range_error, "coefficient index " + std::to_string(k) +
                                " outside [0.." + std::to_string(degree()) + "]");
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

EgfSeries EgfSeries::operator+(const EgfSeries& rhs) const {
  require_same_degree(*this, rhs);
  std::vector<BigRat> out(coeffs_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += rhs.coeffs_[k];
  return EgfSeries(std::move(out));
}

EgfSeries EgfSeries::operator-(const EgfSeries& rhs) const {
  require_same_degree(*this, rhs);
  std::vector<BigRat> out(coeffs_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= rhs.coeffs_[k];
  return EgfSeries(std::move(out));
}

EgfSeries EgfSeries::operator*(const EgfSeries& rhs) const {
  require_same_degree(*this, rhs);
  std::vector<BigRat> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return EgfSeries(std::move(out));
}

EgfSeries EgfSeries::shifted_up() const {
  std::vector<BigRat> out(coeffs_.size());
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = coeffs_[k - 1];
  return EgfSeries(std::move(out));
}

EgfSeries constant_series(const BigRat& c, int degree) {
  std::vector<BigRat> out(static_cast<std::size_t>(degree) + 1);
  out[0] = c;
  return EgfSeries(std::move(out));
}

EgfSeries exp_series(const BigRat& a, int degree) {
  std::vector<BigRat> out(static_cast<std::size_t>(degree) + 1);
  out[0] = 1;
  for (int k = 1; k <= degree; ++k) {
    out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] * a / k;
  }
  return EgfSeries(std::move(out));
}

EgfSeries geometric_series(int degree) {
  std::vector<BigRat> out(static_cast<std::size_t>(degree) + 1, BigRat(1));
  return EgfSeries(std::move(out));
}

EgfSeries egf_derangements(int N) {
  if (N < 0) fail(Errc::range_error, "negative series degree");
  return exp_series(BigRat(-1), N) * geometric_series(N);
}

bool egf_identity_check(int N) {
  if (N < 1) fail(Errc::range_error, "identity check needs degree >= 1");
  const EgfSeries d = egf_derangements(N);
  const EgfSeries e = exp_series(BigRat(1), N);
  const EgfSeries one = constant_series(BigRat(1), N);
  const EgfSeries lhs = d * (e.shifted_up() - e + one);
  const EgfSeries rhs = d - one;
  return lhs == rhs;
}

}  // namespace derange
