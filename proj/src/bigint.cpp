#include "derange/bigint.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace derange {

double to_double(const BigRat& r) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  Float num(boost::multiprecision::numerator(r));
  Float den(boost::multiprecision::denominator(r));
  return (num / den).convert_to<double>();
}

}  // namespace derange
