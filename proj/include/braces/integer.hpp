// Exact integer arithmetic used throughout the library.
//
// Coefficients of free-brace elements grow cubically under the closed-form
// multiplication, so all symbolic arithmetic runs on an arbitrary-precision
// integer. cpp_int keeps small values inline and escalates to heap limbs as
// magnitudes grow; it never wraps.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace braces {

using Int = boost::multiprecision::cpp_int;

// v must be even; returns v/2 exactly. Halving an odd value would silently
// truncate, so it is rejected loudly instead.
inline Int half_even(const Int& v) {
  if (v % 2 != 0)
    throw std::invalid_argument("half_even: " + v.str() + " is odd");
  return v / 2;
}

// (2*k2 + k1 - k1^2) / 2, the integer coefficient appearing in the rank-3
// multiplication rule. k1 - k1^2 = k1*(1 - k1) is a product of consecutive
// integers, hence even, so the division is exact for every input.
inline Int half_coefficient(const Int& k1, const Int& k2) {
  return k2 + half_even(k1 - k1 * k1);
}

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace braces
