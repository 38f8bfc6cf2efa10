// Identity verification suites.
//
// Three layers:
//   * identities:: — single-tuple predicates, used by the suites and by
//     anything that wants to replay a reported witness;
//   * detail::     — tuple drivers (exhaustive table-order scans with
//     first-witness semantics, or seeded sampling);
//   * check_*      — the suites themselves: brace axioms, the star/lambda
//     identity list, and the identities specific to braces with A^3 = <0>.
//
// Exhaustive runs report the first witness in table order and count tuples
// up to and including it. Sampled runs record their seed.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braces/check.hpp"
#include "braces/core.hpp"

namespace braces {

namespace identities {

template <Brace B, typename E = element_t<B>>
bool add_associative(const B& b, const E& x, const E& y, const E& z) {
  return b.add(b.add(x, y), z) == b.add(x, b.add(y, z));
}

template <Brace B, typename E = element_t<B>>
bool add_commutative(const B& b, const E& x, const E& y) {
  return b.add(x, y) == b.add(y, x);
}

template <Brace B, typename E = element_t<B>>
bool zero_neutral(const B& b, const E& x) {
  return b.add(b.zero(), x) == x && b.add(x, b.zero()) == x;
}

template <Brace B, typename E = element_t<B>>
bool neg_inverse(const B& b, const E& x) {
  return b.add(x, b.neg(x)) == b.zero();
}

template <Brace B, typename E = element_t<B>>
bool mul_associative(const B& b, const E& x, const E& y, const E& z) {
  return b.mul(b.mul(x, y), z) == b.mul(x, b.mul(y, z));
}

template <Brace B, typename E = element_t<B>>
bool inv_round_trip(const B& b, const E& x) {
  return b.mul(x, b.inv(x)) == b.zero() && b.mul(b.inv(x), x) == b.zero();
}

template <Brace B, typename E = element_t<B>>
bool identity_is_zero(const B& b, const E& x) {
  return b.mul(b.zero(), x) == x && b.mul(x, b.zero()) == x;
}

// a(b+c) = ab + ac - a.
template <Brace B, typename E = element_t<B>>
bool brace_law(const B& b, const E& x, const E& y, const E& z) {
  return b.mul(x, b.add(y, z)) ==
         sub(b, b.add(b.mul(x, y), b.mul(x, z)), x);
}

// a*(b+c) = a*b + a*c.
template <Brace B, typename E = element_t<B>>
bool star_left_distributive(const B& b, const E& a, const E& x, const E& y) {
  return star(b, a, b.add(x, y)) == b.add(star(b, a, x), star(b, a, y));
}

// (ab)*c = a*(b*c) + b*c + a*c.
template <Brace B, typename E = element_t<B>>
bool product_star_expansion(const B& b, const E& a, const E& c, const E& d) {
  E bc = star(b, c, d);
  return star(b, b.mul(a, c), d) == b.add(b.add(star(b, a, bc), bc), star(b, a, d));
}

// (a+b)*c = a*(lambda_{a^{-1}}(b)*c) + (lambda_{a^{-1}}(b)*c) + a*c,
// with the parenthesization exactly as stated.
template <Brace B, typename E = element_t<B>>
bool sum_star_expansion(const B& b, const E& a, const E& x, const E& c) {
  E d = star(b, lambda_map(b, b.inv(a), x), c);
  return star(b, b.add(a, x), c) == b.add(b.add(star(b, a, d), d), star(b, a, c));
}

// lambda_y(b*a) = (y b y^{-1}) * lambda_y(a).
template <Brace B, typename E = element_t<B>>
bool lambda_conjugation(const B& br, const E& a, const E& b, const E& y) {
  E conj = br.mul(br.mul(y, b), br.inv(y));
  return lambda_map(br, y, star(br, b, a)) == star(br, conj, lambda_map(br, y, a));
}

// y b y^{-1} = lambda_y(b * y^{-1} + b).
template <Brace B, typename E = element_t<B>>
bool conjugation_closed_form(const B& br, const E& b, const E& y) {
  E conj = br.mul(br.mul(y, b), br.inv(y));
  return conj == lambda_map(br, y, br.add(star(br, b, br.inv(y)), b));
}

// For y in A^2: x*y = 0 and xy = x + y.
template <Brace B, typename E = element_t<B>>
bool square_annihilates(const B& b, const E& x, const E& y) {
  return star(b, x, y) == b.zero() && b.mul(x, y) == b.add(x, y);
}

// (xz)*y = x*y + z*y.
template <Brace B, typename E = element_t<B>>
bool product_star_additive(const B& b, const E& x, const E& z, const E& y) {
  return star(b, b.mul(x, z), y) == b.add(star(b, x, y), star(b, z, y));
}

// g^n * z = n(g * z).
template <Brace B, typename E = element_t<B>>
bool power_star_linear(const B& b, const E& g, const E& z, const Int& n) {
  return star(b, power_oracle(b, g, n), z) == scalar_mul(b, n, star(b, g, z));
}

// a^m = m·a + (m^2-m)/2·(a*a), against the repeated-multiplication oracle.
template <Brace B, typename E = element_t<B>>
bool power_closed_form(const B& b, const E& a, const Int& m) {
  return power(b, a, m) == power_oracle(b, a, m);
}

// (na)*(ka) = kn·(a*a) + (n-n^2)/2·k·((a*a)*a).
template <Brace B, typename E = element_t<B>>
bool scalar_star_closed_form(const B& b, const E& a, const Int& n, const Int& k) {
  E sq = star(b, a, a);
  E cu = star(b, sq, a);
  E lhs = star(b, scalar_mul(b, n, a), scalar_mul(b, k, a));
  return lhs == b.add(scalar_mul(b, k * n, sq),
                      scalar_mul(b, half_even(n - n * n) * k, cu));
}

}  // namespace identities

namespace detail {

template <typename B>
void require_finite_for_exhaustive() {
  if constexpr (!FiniteBrace<B>) {
    throw UnsupportedStrategy(
        "exhaustive strategy requires a finite carrier; use sampled");
  }
}

// Each driver evaluates one sub-identity over all tuples (exhaustive, table
// order) or over `count` seeded draws. Returns true if the identity held
// everywhere; otherwise records detail + first witness into `out`.

template <typename B, typename P>
bool run_identity1(const B& b, const Strategy& strat, Rng* rng,
                   CheckResult<element_t<B>>& out, std::string_view what,
                   P&& holds) {
  if (is_sampled(strat)) {
    const auto& s = std::get<Sampled>(strat);
    for (std::uint64_t t = 0; t < s.count; ++t) {
      element_t<B> x = b.sample(*rng);
      if (!holds(x)) {
        out.tuples += t + 1;
        out.detail = what;
        out.witness = {x};
        return false;
      }
    }
    out.tuples += s.count;
    return true;
  }
  require_finite_for_exhaustive<B>();
  if constexpr (FiniteBrace<B>) {
    const std::uint32_t n = b.size();
    for (std::uint32_t i = 0; i < n; ++i) {
      element_t<B> x = b.element(i);
      if (!holds(x)) {
        out.tuples += i + 1;
        out.detail = what;
        out.witness = {x};
        return false;
      }
    }
    out.tuples += n;
  }
  return true;
}

template <typename B, typename P>
bool run_identity2(const B& b, const Strategy& strat, Rng* rng,
                   CheckResult<element_t<B>>& out, std::string_view what,
                   P&& holds) {
  if (is_sampled(strat)) {
    const auto& s = std::get<Sampled>(strat);
    for (std::uint64_t t = 0; t < s.count; ++t) {
      element_t<B> x = b.sample(*rng);
      element_t<B> y = b.sample(*rng);
      if (!holds(x, y)) {
        out.tuples += t + 1;
        out.detail = what;
        out.witness = {x, y};
        return false;
      }
    }
    out.tuples += s.count;
    return true;
  }
  require_finite_for_exhaustive<B>();
  if constexpr (FiniteBrace<B>) {
    const std::uint64_t n = b.size();
    for (std::uint32_t i = 0; i < n; ++i) {
      element_t<B> x = b.element(i);
      for (std::uint32_t j = 0; j < n; ++j) {
        element_t<B> y = b.element(j);
        if (!holds(x, y)) {
          out.tuples += static_cast<std::uint64_t>(i) * n + j + 1;
          out.detail = what;
          out.witness = {x, y};
          return false;
        }
      }
    }
    out.tuples += n * n;
  }
  return true;
}

template <typename B, typename P>
bool run_identity3(const B& b, const Strategy& strat, Rng* rng,
                   CheckResult<element_t<B>>& out, std::string_view what,
                   P&& holds) {
  if (is_sampled(strat)) {
    const auto& s = std::get<Sampled>(strat);
    for (std::uint64_t t = 0; t < s.count; ++t) {
      element_t<B> x = b.sample(*rng);
      element_t<B> y = b.sample(*rng);
      element_t<B> z = b.sample(*rng);
      if (!holds(x, y, z)) {
        out.tuples += t + 1;
        out.detail = what;
        out.witness = {x, y, z};
        return false;
      }
    }
    out.tuples += s.count;
    return true;
  }
  require_finite_for_exhaustive<B>();
  if constexpr (FiniteBrace<B>) {
    const std::uint64_t n = b.size();
    for (std::uint32_t i = 0; i < n; ++i) {
      element_t<B> x = b.element(i);
      for (std::uint32_t j = 0; j < n; ++j) {
        element_t<B> y = b.element(j);
        for (std::uint32_t k = 0; k < n; ++k) {
          element_t<B> z = b.element(k);
          if (!holds(x, y, z)) {
            out.tuples += (static_cast<std::uint64_t>(i) * n + j) * n + k + 1;
            out.detail = what;
            out.witness = {x, y, z};
            return false;
          }
        }
      }
    }
    out.tuples += n * n * n;
  }
  return true;
}

// Latin-square test for one of the two operations of a finite brace: every
// row and every column must be a permutation of the carrier. Witness is
// (fixed element, first colliding pair).
template <FiniteBrace B, typename Op>
bool run_latin(const B& b, CheckResult<element_t<B>>& out,
               std::string_view what, Op&& op) {
  const std::uint32_t n = b.size();
  std::vector<std::uint32_t> seen(n);
  std::vector<std::uint32_t> first(n);
  for (int pass = 0; pass < 2; ++pass) {  // 0: rows, 1: columns
    std::fill(seen.begin(), seen.end(), n);
    for (std::uint32_t i = 0; i < n; ++i) {
      element_t<B> fixed = b.element(i);
      for (std::uint32_t j = 0; j < n; ++j) {
        element_t<B> other = b.element(j);
        std::uint32_t r =
            pass == 0 ? b.index(op(fixed, other)) : b.index(op(other, fixed));
        out.tuples += 1;
        if (seen[r] == i) {
          out.detail = std::string(what) +
                       (pass == 0 ? " row collision" : " column collision");
          out.witness = {fixed, b.element(first[r]), other};
          return false;
        }
        seen[r] = i;
        first[r] = j;
      }
    }
  }
  return true;
}

inline std::optional<Rng> make_rng(const Strategy& strat) {
  if (is_sampled(strat)) return Rng(std::get<Sampled>(strat).seed);
  return std::nullopt;
}

template <typename B>
CheckResult<element_t<B>> new_result(std::string name, const Strategy& strat) {
  CheckResult<element_t<B>> r;
  r.name = std::move(name);
  if (is_sampled(strat)) r.seed = std::get<Sampled>(strat).seed;
  return r;
}

}  // namespace detail

// --- axiom groups -----------------------------------------------------------

template <Brace B>
CheckResult<element_t<B>> check_additive_group(const B& b, const Strategy& strat) {
  auto out = detail::new_result<B>("abelian-addition", strat);
  auto rng = detail::make_rng(strat);
  Rng* r = rng ? &*rng : nullptr;
  if constexpr (FiniteBrace<B>) {
    if (!is_sampled(strat)) {
      if (!detail::run_latin(b, out, "addition table",
                             [&](const auto& x, const auto& y) { return b.add(x, y); }))
        return out;
    }
  }
  namespace id = identities;
  if (!detail::run_identity3(b, strat, r, out, "add-associative",
                             [&](const auto& x, const auto& y, const auto& z) {
                               return id::add_associative(b, x, y, z);
                             }))
    return out;
  if (!detail::run_identity2(b, strat, r, out, "add-commutative",
                             [&](const auto& x, const auto& y) {
                               return id::add_commutative(b, x, y);
                             }))
    return out;
  if (!detail::run_identity1(b, strat, r, out, "zero-neutral",
                             [&](const auto& x) { return id::zero_neutral(b, x); }))
    return out;
  detail::run_identity1(b, strat, r, out, "neg-inverse",
                        [&](const auto& x) { return id::neg_inverse(b, x); });
  return out;
}

template <Brace B>
CheckResult<element_t<B>> check_multiplicative_group(const B& b,
                                                     const Strategy& strat) {
  auto out = detail::new_result<B>("multiplicative-group", strat);
  auto rng = detail::make_rng(strat);
  Rng* r = rng ? &*rng : nullptr;
  if constexpr (FiniteBrace<B>) {
    if (!is_sampled(strat)) {
      if (!detail::run_latin(b, out, "multiplication table",
                             [&](const auto& x, const auto& y) { return b.mul(x, y); }))
        return out;
    }
  }
  namespace id = identities;
  if (!detail::run_identity3(b, strat, r, out, "mul-associative",
                             [&](const auto& x, const auto& y, const auto& z) {
                               return id::mul_associative(b, x, y, z);
                             }))
    return out;
  detail::run_identity1(b, strat, r, out, "inverse-round-trip",
                        [&](const auto& x) { return id::inv_round_trip(b, x); });
  return out;
}

template <Brace B>
CheckResult<element_t<B>> check_identity_is_zero(const B& b,
                                                 const Strategy& strat) {
  auto out = detail::new_result<B>("identity-equals-zero", strat);
  auto rng = detail::make_rng(strat);
  Rng* r = rng ? &*rng : nullptr;
  detail::run_identity1(b, strat, r, out, "zero-is-multiplicative-identity",
                        [&](const auto& x) {
                          return identities::identity_is_zero(b, x);
                        });
  return out;
}

template <Brace B>
CheckResult<element_t<B>> check_left_brace_law(const B& b,
                                               const Strategy& strat) {
  auto out = detail::new_result<B>("left-brace-law", strat);
  auto rng = detail::make_rng(strat);
  Rng* r = rng ? &*rng : nullptr;
  detail::run_identity3(b, strat, r, out, "a(b+c) = ab + ac - a",
                        [&](const auto& x, const auto& y, const auto& z) {
                          return identities::brace_law(b, x, y, z);
                        });
  return out;
}

// The full axiom suite: abelian addition, multiplicative group, identity
// coincides with zero, left-brace law. One report per group.
template <Brace B>
std::vector<CheckResult<element_t<B>>> check_brace_axioms(const B& b,
                                                          const Strategy& strat) {
  std::vector<CheckResult<element_t<B>>> out;
  out.push_back(check_additive_group(b, strat));
  out.push_back(check_multiplicative_group(b, strat));
  out.push_back(check_identity_is_zero(b, strat));
  out.push_back(check_left_brace_law(b, strat));
  return out;
}

// --- star/lambda identity list ----------------------------------------------
//
// Callers are expected to have run check_brace_axioms already; these suites
// do not re-verify the axioms.

template <Brace B>
std::vector<CheckResult<element_t<B>>> check_derived_identities(
    const B& b, const Strategy& strat) {
  namespace id = identities;
  std::vector<CheckResult<element_t<B>>> out;

  {
    auto rep = detail::new_result<B>("star-left-distributive", strat);
    auto rng = detail::make_rng(strat);
    detail::run_identity3(b, strat, rng ? &*rng : nullptr, rep,
                          "a*(b+c) = a*b + a*c",
                          [&](const auto& a, const auto& x, const auto& y) {
                            return id::star_left_distributive(b, a, x, y);
                          });
    out.push_back(std::move(rep));
  }
  {
    auto rep = detail::new_result<B>("product-star-expansion", strat);
    auto rng = detail::make_rng(strat);
    detail::run_identity3(b, strat, rng ? &*rng : nullptr, rep,
                          "(ab)*c = a*(b*c) + b*c + a*c",
                          [&](const auto& a, const auto& x, const auto& y) {
                            return id::product_star_expansion(b, a, x, y);
                          });
    out.push_back(std::move(rep));
  }
  {
    auto rep = detail::new_result<B>("sum-star-expansion", strat);
    auto rng = detail::make_rng(strat);
    detail::run_identity3(
        b, strat, rng ? &*rng : nullptr, rep,
        "(a+b)*c = a*(lambda_{a^-1}(b)*c) + (lambda_{a^-1}(b)*c) + a*c",
        [&](const auto& a, const auto& x, const auto& y) {
          return id::sum_star_expansion(b, a, x, y);
        });
    out.push_back(std::move(rep));
  }
  {
    auto rep = detail::new_result<B>("lambda-conjugation", strat);
    auto rng = detail::make_rng(strat);
    Rng* r = rng ? &*rng : nullptr;
    if (detail::run_identity3(b, strat, r, rep,
                              "lambda_y(b*a) = (y b y^-1) * lambda_y(a)",
                              [&](const auto& a, const auto& x, const auto& y) {
                                return id::lambda_conjugation(b, a, x, y);
                              })) {
      detail::run_identity2(b, strat, r, rep,
                            "y b y^-1 = lambda_y(b*y^-1 + b)",
                            [&](const auto& x, const auto& y) {
                              return id::conjugation_closed_form(b, x, y);
                            });
    }
    out.push_back(std::move(rep));
  }
  return out;
}

// --- identities valid under A^3 = <0> ----------------------------------------
//
// Precondition (not re-verified here): the brace satisfies A^3 = <0>. The
// CLI establishes it through the series module before invoking this suite.

struct IntRange {
  std::int64_t lo = -6;
  std::int64_t hi = 6;
};

template <Brace B>
std::vector<CheckResult<element_t<B>>> check_A3_identities(
    const B& b, const IntRange& range, const Strategy& strat) {
  namespace id = identities;
  std::vector<CheckResult<element_t<B>>> out;

  // (i) x*y = 0 and xy = x+y for y in A^2.
  {
    auto rep = detail::new_result<B>("square-annihilates", strat);
    if (is_sampled(strat)) {
      const auto& s = std::get<Sampled>(strat);
      Rng rng(s.seed);
      bool ok = true;
      for (std::uint64_t t = 0; t < s.count && ok; ++t) {
        element_t<B> x = b.sample(rng);
        // A^2 samples: additive combinations of star values.
        element_t<B> y = b.add(star(b, b.sample(rng), b.sample(rng)),
                               star(b, b.sample(rng), b.sample(rng)));
        rep.tuples += 1;
        if (!id::square_annihilates(b, x, y)) {
          rep.detail = "x*y = 0 and xy = x+y for y in A^2";
          rep.witness = {x, y};
          ok = false;
        }
      }
    } else {
      detail::require_finite_for_exhaustive<B>();
      if constexpr (FiniteBrace<B>) {
        const std::uint32_t n = b.size();
        std::vector<char> gen_mask(n, 0);
        std::vector<std::uint32_t> gens;
        for (std::uint32_t i = 0; i < n && gens.size() < n; ++i) {
          for (std::uint32_t j = 0; j < n; ++j) {
            std::uint32_t s = b.index(star(b, b.element(i), b.element(j)));
            if (!gen_mask[s]) {
              gen_mask[s] = 1;
              gens.push_back(s);
            }
          }
        }
        std::vector<std::uint32_t> a2 = detail::additive_closure(b, gens);
        bool ok = true;
        for (std::uint32_t i = 0; i < n && ok; ++i) {
          element_t<B> x = b.element(i);
          for (std::uint32_t yi : a2) {
            element_t<B> y = b.element(yi);
            rep.tuples += 1;
            if (!id::square_annihilates(b, x, y)) {
              rep.detail = "x*y = 0 and xy = x+y for y in A^2";
              rep.witness = {x, y};
              ok = false;
              break;
            }
          }
        }
      }
    }
    out.push_back(std::move(rep));
  }

  // (ii) (xz)*y = x*y + z*y.
  {
    auto rep = detail::new_result<B>("product-star-additive", strat);
    auto rng = detail::make_rng(strat);
    detail::run_identity3(b, strat, rng ? &*rng : nullptr, rep,
                          "(xz)*y = x*y + z*y",
                          [&](const auto& x, const auto& z, const auto& y) {
                            return id::product_star_additive(b, x, z, y);
                          });
    out.push_back(std::move(rep));
  }

  // (iii) g^n * z = n(g*z) for n in range.
  {
    auto rep = detail::new_result<B>("power-star-linear", strat);
    auto rng = detail::make_rng(strat);
    detail::run_identity2(b, strat, rng ? &*rng : nullptr, rep,
                          "g^n * z = n(g*z)",
                          [&](const auto& g, const auto& z) {
                            for (std::int64_t n = range.lo; n <= range.hi; ++n) {
                              if (!id::power_star_linear(b, g, z, Int(n))) {
                                rep.detail = "g^n * z = n(g*z) at n=" +
                                             std::to_string(n);
                                return false;
                              }
                            }
                            return true;
                          });
    out.push_back(std::move(rep));
  }

  // (iv) a^m closed form vs repeated multiplication for m in range.
  {
    auto rep = detail::new_result<B>("power-closed-form", strat);
    auto rng = detail::make_rng(strat);
    detail::run_identity1(b, strat, rng ? &*rng : nullptr, rep,
                          "a^m = m a + (m^2-m)/2 (a*a)",
                          [&](const auto& a) {
                            for (std::int64_t m = range.lo; m <= range.hi; ++m) {
                              if (!id::power_closed_form(b, a, Int(m))) {
                                rep.detail =
                                    "a^m closed form at m=" + std::to_string(m);
                                return false;
                              }
                            }
                            return true;
                          });
    out.push_back(std::move(rep));
  }

  // (v) (na)*(ka) closed form for n, k in range.
  {
    auto rep = detail::new_result<B>("scalar-star-closed-form", strat);
    auto rng = detail::make_rng(strat);
    detail::run_identity1(
        b, strat, rng ? &*rng : nullptr, rep,
        "(na)*(ka) = kn(a*a) + (n-n^2)/2 k ((a*a)*a)",
        [&](const auto& a) {
          for (std::int64_t n = range.lo; n <= range.hi; ++n) {
            for (std::int64_t k = range.lo; k <= range.hi; ++k) {
              if (!id::scalar_star_closed_form(b, a, Int(n), Int(k))) {
                rep.detail = "(na)*(ka) closed form at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k);
                return false;
              }
            }
          }
          return true;
        });
    out.push_back(std::move(rep));
  }

  return out;
}

template <typename E>
bool all_passed(const std::vector<CheckResult<E>>& checks) {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

}  // namespace braces
