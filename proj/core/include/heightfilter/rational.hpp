#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace heightfilter {

// All arithmetic in this library is exact: arbitrary-precision integers
// and rationals, no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace heightfilter
