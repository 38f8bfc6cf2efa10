// The free one-generator left brace of rank 3 on Z x Z x Z.
//
// Addition is componentwise; multiplication is
//
//   (k1,k2,k3)(t1,t2,t3) = (k1 + t1,
//                           k1*t1 + k2 + t2,
//                           k3 + t3 + (2*k2 + k1 - k1^2)/2 * t1)
//
// The half-coefficient is always an integer (k1 - k1^2 is a product of
// consecutive integers). Identity is (0,0,0); the inverse is
//
//   x^{-1} = (-k1, k1^2 - k2, k1*k2 + (k1^2 - k1^3)/2 - k3).
//
// Every one-generator brace whose generator sequence dies at a_4 = 0 with
// a_3 != 0 is an epimorphic image of this brace.

#pragma once

#include <cstdint>
#include <string>

#include "braces/check.hpp"
#include "braces/integer.hpp"

namespace braces {

struct D3Element {
  Int k1;
  Int k2;
  Int k3;

  bool operator==(const D3Element&) const = default;
};

inline D3Element d3_mul(const D3Element& x, const D3Element& y) {
  return {x.k1 + y.k1, x.k1 * y.k1 + x.k2 + y.k2,
          x.k3 + y.k3 + half_coefficient(x.k1, x.k2) * y.k1};
}

inline D3Element d3_inv(const D3Element& x) {
  return {-x.k1, x.k1 * x.k1 - x.k2,
          x.k1 * x.k2 + half_even(x.k1 * x.k1 - x.k1 * x.k1 * x.k1) - x.k3};
}

// x*y = t1*k1·a2 + (2*k2 + k1 - k1^2)/2 * t1·a3. Depends on y only through
// its first coefficient.
inline D3Element d3_star(const D3Element& x, const D3Element& y) {
  return {Int(0), y.k1 * x.k1, half_coefficient(x.k1, x.k2) * y.k1};
}

class D3Brace {
 public:
  using element_type = D3Element;

  D3Brace() = default;
  D3Brace(std::int64_t coeff_lo, std::int64_t coeff_hi)
      : lo_(coeff_lo), hi_(coeff_hi) {}

  element_type zero() const { return {Int(0), Int(0), Int(0)}; }
  element_type add(const element_type& x, const element_type& y) const {
    return {x.k1 + y.k1, x.k2 + y.k2, x.k3 + y.k3};
  }
  element_type neg(const element_type& x) const { return {-x.k1, -x.k2, -x.k3}; }
  element_type mul(const element_type& x, const element_type& y) const {
    return d3_mul(x, y);
  }
  element_type inv(const element_type& x) const { return d3_inv(x); }

  element_type sample(Rng& rng) const {
    Int a = rng.uniform(lo_, hi_);
    Int b = rng.uniform(lo_, hi_);
    Int c = rng.uniform(lo_, hi_);
    return {a, b, c};
  }

  element_type generator() const { return {Int(1), Int(0), Int(0)}; }

  std::string format(const element_type& x) const {
    return "(" + to_string(x.k1) + "," + to_string(x.k2) + "," +
           to_string(x.k3) + ")";
  }

  std::string describe() const { return "free_d3"; }

 private:
  std::int64_t lo_ = -1000;
  std::int64_t hi_ = 1000;
};

}  // namespace braces
