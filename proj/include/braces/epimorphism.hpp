// The universal map f : D3 -> A, f(k1, k2, k3) = k1*a1 + k2*a2 + k3*a3,
// where a1 = a and a_{j+1} = a_j * a in the target. For targets whose a3
// vanishes the same handle serves as f : D2 -> A (the third coefficient is
// inert).
//
// The handle verifies its contract empirically: additivity and
// multiplicativity on sampled domain pairs, and — for finite targets —
// exact surjectivity of the coefficient image onto br(a).

#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "braces/cayley.hpp"
#include "braces/check.hpp"
#include "braces/core.hpp"
#include "braces/free_d2.hpp"
#include "braces/free_d3.hpp"
#include "braces/series.hpp"

namespace braces {

template <Brace Target>
class Epimorphism {
 public:
  using target_element = element_t<Target>;

  Epimorphism(const Target& target, target_element a, D3Brace domain = D3Brace())
      : target_(&target),
        domain_(std::move(domain)),
        a1_(a),
        a2_(star(target, a, a)),
        a3_(star(target, star(target, a, a), a)) {}

  const Target& target() const { return *target_; }
  const D3Brace& domain() const { return domain_; }
  target_element a1() const { return a1_; }
  target_element a2() const { return a2_; }
  target_element a3() const { return a3_; }

  // When a3 = 0 in the target, f factors through D2.
  bool factors_through_d2() const { return a3_ == target_->zero(); }

  target_element map(const D3Element& x) const {
    const Target& t = *target_;
    target_element v = scalar_mul(t, x.k1, a1_);
    v = t.add(v, scalar_mul(t, x.k2, a2_));
    return t.add(v, scalar_mul(t, x.k3, a3_));
  }
  target_element map(const D2Element& x) const {
    const Target& t = *target_;
    return t.add(scalar_mul(t, x.k1, a1_), scalar_mul(t, x.k2, a2_));
  }

  // f(x + y) = f(x) + f(y) on sampled domain pairs.
  CheckResult<D3Element> check_additive(const Sampled& s) const {
    CheckResult<D3Element> out;
    out.name = "epimorphism-additive";
    out.seed = s.seed;
    Rng rng(s.seed);
    for (std::uint64_t t = 0; t < s.count; ++t) {
      D3Element x = domain_.sample(rng);
      D3Element y = domain_.sample(rng);
      out.tuples += 1;
      if (map(domain_.add(x, y)) != target_->add(map(x), map(y))) {
        out.detail = "f(x+y) != f(x)+f(y)";
        out.witness = {x, y};
        return out;
      }
    }
    return out;
  }

  // f(xy) = f(x) f(y) on sampled domain pairs.
  CheckResult<D3Element> check_multiplicative(const Sampled& s) const {
    CheckResult<D3Element> out;
    out.name = "epimorphism-multiplicative";
    out.seed = s.seed;
    Rng rng(s.seed);
    for (std::uint64_t t = 0; t < s.count; ++t) {
      D3Element x = domain_.sample(rng);
      D3Element y = domain_.sample(rng);
      out.tuples += 1;
      if (map(domain_.mul(x, y)) != target_->mul(map(x), map(y))) {
        out.detail = "f(xy) != f(x)f(y)";
        out.witness = {x, y};
        return out;
      }
    }
    return out;
  }

  // Exact surjectivity onto br(a): the image of coefficient triples with
  // kj in [0, additive order of aj) must cover the subbrace closure of {a}.
  // Finite targets only.
  CheckResult<target_element> check_surjective() const {
    if constexpr (!std::is_same_v<Target, CayleyBrace>) {
      throw UnsupportedStrategy(
          "surjectivity verification requires a finite target");
    } else {
      const CayleyBrace& t = *target_;
      CheckResult<target_element> out;
      out.name = "epimorphism-surjective";

      std::vector<char> image(t.size(), 0);
      const std::uint32_t o1 = additive_order(t, a1_);
      const std::uint32_t o2 = additive_order(t, a2_);
      const std::uint32_t o3 = additive_order(t, a3_);
      target_element acc1 = t.zero();
      for (std::uint32_t k1 = 0; k1 < o1; ++k1) {
        target_element acc2 = acc1;
        for (std::uint32_t k2 = 0; k2 < o2; ++k2) {
          target_element acc3 = acc2;
          for (std::uint32_t k3 = 0; k3 < o3; ++k3) {
            image[t.index(acc3)] = 1;
            out.tuples += 1;
            acc3 = t.add(acc3, a3_);
          }
          acc2 = t.add(acc2, a2_);
        }
        acc1 = t.add(acc1, a1_);
      }

      AdditiveSubgroup closure = subbrace_closure(t, {t.index(a1_)});
      for (std::uint32_t e : closure.members) {
        if (!image[e]) {
          out.detail = "element of br(a) not in the coefficient image";
          out.witness = {e};
          return out;
        }
      }
      return out;
    }
  }

 private:
  const Target* target_;
  D3Brace domain_;
  target_element a1_;
  target_element a2_;
  target_element a3_;
};

template <Brace Target>
Epimorphism<Target> epimorphism_to(const Target& target,
                                   element_t<Target> a) {
  return Epimorphism<Target>(target, a);
}

}  // namespace braces
