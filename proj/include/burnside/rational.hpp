#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "burnside/errors.hpp"

namespace burnside {

// All arithmetic in this project is exact. Invariant values are rationals
// whose denominators divide the group order; chain counts and Mobius sums are
// integers that can outgrow 64 bits on deep lattices.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Always renders as "p/q" (including "0/1" and "1/1") so output diffs stay stable.
inline std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

}  // namespace burnside
