// The free one-generator left brace of rank 2 on Z x Z.
//
// Addition is componentwise; multiplication is
//
//   (k1, k2)(t1, t2) = (k1 + t1, k1*t1 + k2 + t2)
//
// with identity (0,0) and inverse (-k1, k1^2 - k2). Every one-generator
// brace whose generator sequence dies at a_3 = 0 is an epimorphic image of
// this brace. The carrier is all of Z^2; sampling draws coefficients from a
// configurable window.

#pragma once

#include <cstdint>
#include <string>

#include "braces/check.hpp"
#include "braces/integer.hpp"

namespace braces {

struct D2Element {
  Int k1;
  Int k2;

  bool operator==(const D2Element&) const = default;
};

inline D2Element d2_mul(const D2Element& x, const D2Element& y) {
  return {x.k1 + y.k1, x.k1 * y.k1 + x.k2 + y.k2};
}

// Solves x·y = (0,0); round-trips with d2_mul on both sides.
inline D2Element d2_inv(const D2Element& x) {
  return {-x.k1, x.k1 * x.k1 - x.k2};
}

// x*y = t1*k1·a2, the rank-2 closed form for the star operation.
inline D2Element d2_star(const D2Element& x, const D2Element& y) {
  return {Int(0), y.k1 * x.k1};
}

class D2Brace {
 public:
  using element_type = D2Element;

  D2Brace() = default;
  D2Brace(std::int64_t coeff_lo, std::int64_t coeff_hi)
      : lo_(coeff_lo), hi_(coeff_hi) {}

  element_type zero() const { return {Int(0), Int(0)}; }
  element_type add(const element_type& x, const element_type& y) const {
    return {x.k1 + y.k1, x.k2 + y.k2};
  }
  element_type neg(const element_type& x) const { return {-x.k1, -x.k2}; }
  element_type mul(const element_type& x, const element_type& y) const {
    return d2_mul(x, y);
  }
  element_type inv(const element_type& x) const { return d2_inv(x); }

  element_type sample(Rng& rng) const {
    Int a = rng.uniform(lo_, hi_);
    Int b = rng.uniform(lo_, hi_);
    return {a, b};
  }

  element_type generator() const { return {Int(1), Int(0)}; }

  std::string format(const element_type& x) const {
    return "(" + to_string(x.k1) + "," + to_string(x.k2) + ")";
  }

  std::string describe() const { return "free_d2"; }

 private:
  std::int64_t lo_ = -1000;
  std::int64_t hi_ = 1000;
};

}  // namespace braces
