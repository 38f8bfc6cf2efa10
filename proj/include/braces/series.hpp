// Nilpotency machinery for finite braces: star-products of additive
// subgroups, the left series A^k and the star series A^(n), the N_S(n, k)
// classification, ideal predicates, and subbrace closures.
//
// Series are computed only on finite braces (CayleyBrace). The free braces
// D2/D3 are classified separately by `classify_free`, which gathers sampled
// structural evidence for the closed-form star rather than enumerating an
// infinite carrier.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braces/axioms.hpp"
#include "braces/cayley.hpp"
#include "braces/check.hpp"
#include "braces/core.hpp"
#include "braces/free_d2.hpp"
#include "braces/free_d3.hpp"

namespace braces {

// A subgroup of the additive group, stored as a sorted member list with a
// membership mask and the generating set it was closed over.
struct AdditiveSubgroup {
  std::vector<std::uint32_t> members;     // sorted carrier indices
  std::vector<std::uint32_t> generators;  // deduplicated, discovery order
  std::vector<char> mask;                 // carrier-size membership bitmap

  bool contains(std::uint32_t i) const { return mask[i] != 0; }
  std::size_t size() const { return members.size(); }
  bool is_zero_only() const { return members.size() == 1; }
};

inline AdditiveSubgroup make_subgroup(const CayleyBrace& b,
                                      std::vector<std::uint32_t> generators) {
  AdditiveSubgroup s;
  s.generators = std::move(generators);
  s.members = detail::additive_closure(b, s.generators);
  s.mask.assign(b.size(), 0);
  for (std::uint32_t i : s.members) s.mask[i] = 1;
  return s;
}

inline AdditiveSubgroup full_subgroup(const CayleyBrace& b) {
  AdditiveSubgroup s;
  s.members.resize(b.size());
  for (std::uint32_t i = 0; i < b.size(); ++i) s.members[i] = i;
  s.mask.assign(b.size(), 1);
  return s;
}

// K * L: the additive subgroup generated by {x * y : x in K, y in L}.
inline AdditiveSubgroup star_subgroup(const CayleyBrace& b,
                                      const AdditiveSubgroup& K,
                                      const AdditiveSubgroup& L) {
  std::vector<char> seen(b.size(), 0);
  std::vector<std::uint32_t> gens;
  for (std::uint32_t x : K.members)
    for (std::uint32_t y : L.members) {
      std::uint32_t s = star(b, x, y);
      if (!seen[s]) {
        seen[s] = 1;
        gens.push_back(s);
      }
    }
  return make_subgroup(b, std::move(gens));
}

namespace detail {

enum class SeriesKind { left, star };

// Shared driver: A^{k+1} = A * A^k (left) or A^{(n+1)} = A^{(n)} * A (star).
// The chain includes A itself and stops at the first {0} stage, on
// stabilization, or at max_depth stages.
inline std::vector<AdditiveSubgroup> compute_series(const CayleyBrace& b,
                                                    SeriesKind kind,
                                                    std::uint32_t max_depth) {
  std::vector<AdditiveSubgroup> chain;
  AdditiveSubgroup whole = full_subgroup(b);
  chain.push_back(whole);
  while (chain.size() < max_depth) {
    const AdditiveSubgroup& last = chain.back();
    if (last.is_zero_only()) break;
    AdditiveSubgroup next = kind == SeriesKind::left
                                ? star_subgroup(b, whole, last)
                                : star_subgroup(b, last, whole);
    if (next.members == last.members) break;  // stalled above {0}
    chain.push_back(std::move(next));
  }
  return chain;
}

inline std::optional<std::uint32_t> zero_stage_index(
    const std::vector<AdditiveSubgroup>& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (chain[i].is_zero_only())
      return static_cast<std::uint32_t>(i + 1);  // stages are 1-based
  return std::nullopt;
}

}  // namespace detail

inline std::vector<AdditiveSubgroup> left_series(const CayleyBrace& b,
                                                 std::uint32_t max_depth = 10) {
  return detail::compute_series(b, detail::SeriesKind::left, max_depth);
}

inline std::vector<AdditiveSubgroup> star_series(const CayleyBrace& b,
                                                 std::uint32_t max_depth = 10) {
  return detail::compute_series(b, detail::SeriesKind::star, max_depth);
}

// Both chains plus the least vanishing indices: n for the star series,
// k for the left series. Absent index = not nilpotent within max_depth.
struct SeriesReport {
  std::vector<AdditiveSubgroup> left_chain;
  std::vector<AdditiveSubgroup> star_chain;
  std::optional<std::uint32_t> k;  // least k with A^k = {0}
  std::optional<std::uint32_t> n;  // least n with A^(n) = {0}

  bool nilpotent_within_bound() const { return k.has_value() && n.has_value(); }
};

inline SeriesReport classify_NS(const CayleyBrace& b,
                                std::uint32_t max_depth = 10) {
  SeriesReport r;
  r.left_chain = left_series(b, max_depth);
  r.star_chain = star_series(b, max_depth);
  r.k = detail::zero_stage_index(r.left_chain);
  r.n = detail::zero_stage_index(r.star_chain);
  return r;
}

// Left ideal: a * x in L for every a in A, x in L. Witness is the first
// violating (a, x) in table order.
inline CheckResult<std::uint32_t> is_left_ideal(const CayleyBrace& b,
                                                const AdditiveSubgroup& L) {
  CheckResult<std::uint32_t> out;
  out.name = "is-left-ideal";
  for (std::uint32_t a = 0; a < b.size(); ++a)
    for (std::uint32_t x : L.members) {
      out.tuples += 1;
      if (!L.contains(star(b, a, x))) {
        out.detail = "a*x not in L";
        out.witness = {a, x};
        return out;
      }
    }
  return out;
}

// Ideal: both a * x and x * a lie in L for every a in A, x in L.
inline CheckResult<std::uint32_t> is_ideal(const CayleyBrace& b,
                                           const AdditiveSubgroup& L) {
  CheckResult<std::uint32_t> out;
  out.name = "is-ideal";
  for (std::uint32_t a = 0; a < b.size(); ++a)
    for (std::uint32_t x : L.members) {
      out.tuples += 1;
      if (!L.contains(star(b, a, x))) {
        out.detail = "a*x not in L";
        out.witness = {a, x};
        return out;
      }
      if (!L.contains(star(b, x, a))) {
        out.detail = "x*a not in L";
        out.witness = {a, x};
        return out;
      }
    }
  return out;
}

// br(S): closure of S under add, neg, mul, inv — the least subbrace
// containing S. Returned as an AdditiveSubgroup whose generating set is S.
inline AdditiveSubgroup subbrace_closure(const CayleyBrace& b,
                                         std::vector<std::uint32_t> S) {
  std::vector<char> in(b.size(), 0);
  std::vector<std::uint32_t> members;
  auto push = [&](std::uint32_t e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
    }
  };
  push(b.zero());
  for (std::uint32_t s : S) push(s);
  for (std::size_t p = 0; p < members.size(); ++p) {
    std::uint32_t e = members[p];
    push(b.neg(e));
    push(b.inv(e));
    for (std::size_t q = 0; q <= p; ++q) {
      std::uint32_t x = members[q];
      push(b.add(e, x));
      push(b.add(x, e));
      push(b.mul(e, x));
      push(b.mul(x, e));
    }
  }
  AdditiveSubgroup out;
  std::sort(members.begin(), members.end());
  out.members = std::move(members);
  out.mask.assign(b.size(), 0);
  for (std::uint32_t i : out.members) out.mask[i] = 1;
  out.generators = std::move(S);
  return out;
}

// --- symbolic classification of the free braces -------------------------------
//
// D2 and D3 have infinite carriers, so their N_S classes are established by
// sampled evidence for the structural facts the closed-form star makes
// visible: where star values land, which iterated stars vanish, and that the
// relevant generator-sequence entries are (non)zero.

template <typename E>
struct FreeClassification {
  std::string family;
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> k;
  std::vector<CheckResult<E>> evidence;

  bool conclusive() const { return n.has_value() && k.has_value(); }
};

namespace detail {

// Sampled tuple check with a caller-chosen arity: draws `arity` elements per
// trial and records the first violating tuple.
template <typename B, typename F>
CheckResult<element_t<B>> sampled_tuple_check(const B& b, const Sampled& s,
                                              std::string name,
                                              std::string what, int arity,
                                              F&& holds) {
  CheckResult<element_t<B>> out;
  out.name = std::move(name);
  out.seed = s.seed;
  Rng rng(s.seed);
  std::vector<element_t<B>> tuple(static_cast<std::size_t>(arity));
  for (std::uint64_t t = 0; t < s.count; ++t) {
    for (auto& e : tuple) e = b.sample(rng);
    out.tuples += 1;
    if (!holds(tuple)) {
      out.detail = std::move(what);
      out.witness = tuple;
      return out;
    }
  }
  return out;
}

}  // namespace detail

inline FreeClassification<D2Element> classify_free(const D2Brace& b,
                                                   const Sampled& s) {
  FreeClassification<D2Element> out;
  out.family = "free_d2";

  {
    CheckResult<D2Element> seq;
    seq.name = "generator-sequence";
    seq.tuples = 1;
    auto gs = generator_sequence(b, b.generator(), 3);
    if (!(gs[1] != b.zero() && gs[2] == b.zero())) {
      seq.detail = "expected a2 != 0 and a3 = 0";
      seq.witness = {gs[1], gs[2]};
    }
    out.evidence.push_back(std::move(seq));
  }
  out.evidence.push_back(detail::sampled_tuple_check(
      b, s, "star-lands-in-A2", "x*y must have k1 = 0", 2,
      [&](const std::vector<D2Element>& t) {
        return d2_star(t[0], t[1]).k1 == 0;
      }));
  out.evidence.push_back(detail::sampled_tuple_check(
      b, s, "A-star-A2-vanishes", "x*(y*z) must be 0", 3,
      [&](const std::vector<D2Element>& t) {
        return star(b, t[0], star(b, t[1], t[2])) == b.zero();
      }));
  out.evidence.push_back(detail::sampled_tuple_check(
      b, s, "A2-star-A-vanishes", "(x*y)*z must be 0", 3,
      [&](const std::vector<D2Element>& t) {
        return star(b, star(b, t[0], t[1]), t[2]) == b.zero();
      }));

  if (all_passed(out.evidence)) {
    // A^2 != 0 (a2 nonzero) and A*A^2 = 0 give k = 3; A^(2) != 0 and
    // A^(3) = A^2*A = 0 give n = 3.
    out.n = 3;
    out.k = 3;
  }
  return out;
}

inline FreeClassification<D3Element> classify_free(const D3Brace& b,
                                                   const Sampled& s) {
  FreeClassification<D3Element> out;
  out.family = "free_d3";

  {
    CheckResult<D3Element> seq;
    seq.name = "generator-sequence";
    seq.tuples = 1;
    auto gs = generator_sequence(b, b.generator(), 4);
    if (!(gs[2] != b.zero() && gs[3] == b.zero())) {
      seq.detail = "expected a3 != 0 and a4 = 0";
      seq.witness = {gs[2], gs[3]};
    }
    out.evidence.push_back(std::move(seq));
  }
  out.evidence.push_back(detail::sampled_tuple_check(
      b, s, "star-lands-in-A2", "x*y must have k1 = 0", 2,
      [&](const std::vector<D3Element>& t) {
        return d3_star(t[0], t[1]).k1 == 0;
      }));
  out.evidence.push_back(detail::sampled_tuple_check(
      b, s, "A-star-A2-vanishes", "x*(y*z) must be 0", 3,
      [&](const std::vector<D3Element>& t) {
        return star(b, t[0], star(b, t[1], t[2])) == b.zero();
      }));
  out.evidence.push_back(detail::sampled_tuple_check(
      b, s, "A2-star-A-lands-in-A3", "(x*y)*z must have k1 = k2 = 0", 3,
      [&](const std::vector<D3Element>& t) {
        D3Element u = star(b, star(b, t[0], t[1]), t[2]);
        return u.k1 == 0 && u.k2 == 0;
      }));
  out.evidence.push_back(detail::sampled_tuple_check(
      b, s, "A3-star-A-vanishes", "((x*y)*z)*u must be 0", 4,
      [&](const std::vector<D3Element>& t) {
        return star(b, star(b, star(b, t[0], t[1]), t[2]), t[3]) == b.zero();
      }));

  if (all_passed(out.evidence)) {
    // A*A^2 = 0 with A^2 != 0 gives k = 3; the star chain descends through
    // <a3> != 0 and dies one step later, giving n = 4.
    out.n = 4;
    out.k = 3;
  }
  return out;
}

}  // namespace braces
