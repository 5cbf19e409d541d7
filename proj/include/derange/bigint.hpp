#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace derange {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Rounded conversion that stays accurate when numerator and denominator are
// individually far outside double range (e.g. d_{501} / 500!).
double to_double(const BigRat& r);

}  // namespace derange
