// Brace interface and the derived operations shared by every realization.
//
// A left brace is an abelian group (A,+) and a group (A,·) on the same
// carrier, with multiplicative identity equal to 0 and the law
// a(b+c) = ab + ac - a. The derived operations live here:
//
//   a * b      = ab - a - b
//   lambda_a(x) = ax - a
//
// Concrete braces (symbolic rank-2/rank-3, finite Cayley tables) model the
// Brace concept below; the verifier suites in axioms.hpp and the series
// machinery in series.hpp are written against the concept.

#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "braces/check.hpp"
#include "braces/integer.hpp"

namespace braces {

template <typename B>
concept Brace = requires(const B& b, const typename B::element_type& x,
                         const typename B::element_type& y) {
  typename B::element_type;
  { b.add(x, y) } -> std::convertible_to<typename B::element_type>;
  { b.neg(x) } -> std::convertible_to<typename B::element_type>;
  { b.zero() } -> std::convertible_to<typename B::element_type>;
  { b.mul(x, y) } -> std::convertible_to<typename B::element_type>;
  { b.inv(x) } -> std::convertible_to<typename B::element_type>;
  { b.format(x) } -> std::convertible_to<std::string>;
  { x == y } -> std::convertible_to<bool>;
};

// Finite braces enumerate their carrier in a fixed table order; exhaustive
// verification and the series computations require this.
template <typename B>
concept FiniteBrace = Brace<B> && requires(const B& b, std::uint32_t i,
                                           const typename B::element_type& x) {
  { b.size() } -> std::convertible_to<std::uint32_t>;
  { b.element(i) } -> std::convertible_to<typename B::element_type>;
  { b.index(x) } -> std::convertible_to<std::uint32_t>;
};

// Braces that can draw a pseudo-random element (all of ours can; the free
// braces draw coefficient vectors from a configured window).
template <typename B>
concept SampledBrace = Brace<B> && requires(const B& b, Rng& rng) {
  { b.sample(rng) } -> std::convertible_to<typename B::element_type>;
};

template <Brace B>
using element_t = typename B::element_type;

// x - y in the additive group.
template <Brace B>
element_t<B> sub(const B& b, const element_t<B>& x, const element_t<B>& y) {
  return b.add(x, b.neg(y));
}

// a * b = ab - a - b, the deviation of multiplication from addition.
template <Brace B>
element_t<B> star(const B& b, const element_t<B>& x, const element_t<B>& y) {
  return sub(b, b.mul(x, y), b.add(x, y));
}

// lambda_a(x) = ax - a.
template <Brace B>
element_t<B> lambda_map(const B& b, const element_t<B>& a,
                        const element_t<B>& x) {
  return sub(b, b.mul(a, x), a);
}

// n-fold additive multiple n·x, exact for any integer n (doubling chain).
// Distinct from power(): na = a^n only up to the closed-form correction.
template <Brace B>
element_t<B> scalar_mul(const B& b, Int n, const element_t<B>& x) {
  element_t<B> base = x;
  if (n < 0) {
    base = b.neg(base);
    n = -n;
  }
  element_t<B> acc = b.zero();
  while (n > 0) {
    if ((n & 1) != 0) acc = b.add(acc, base);
    base = b.add(base, base);
    n >>= 1;
  }
  return acc;
}

// a^m by literal repeated multiplication (inverse first for m < 0). Kept
// naive on purpose: it is the independent oracle the closed form is checked
// against.
template <Brace B>
element_t<B> power_oracle(const B& b, const element_t<B>& a, const Int& m) {
  element_t<B> base = m < 0 ? b.inv(a) : a;
  Int reps = m < 0 ? Int(-m) : m;
  element_t<B> acc = b.zero();
  for (Int i = 0; i < reps; ++i) acc = b.mul(acc, base);
  return acc;
}

// a^m = m·a + (m^2 - m)/2 · (a*a), valid in braces with A^3 = <0>.
template <Brace B>
element_t<B> power(const B& b, const element_t<B>& a, const Int& m) {
  element_t<B> square = star(b, a, a);
  return b.add(scalar_mul(b, m, a), scalar_mul(b, half_even(m * m - m), square));
}

// [a_1, ..., a_n] with a_1 = a and a_{j+1} = a_j * a. Once a stage hits zero
// every later stage is zero.
template <Brace B>
std::vector<element_t<B>> generator_sequence(const B& b, const element_t<B>& a,
                                             std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("generator_sequence: n must be >= 1");
  std::vector<element_t<B>> seq;
  seq.reserve(n);
  seq.push_back(a);
  for (std::uint32_t j = 1; j < n; ++j) seq.push_back(star(b, seq.back(), a));
  return seq;
}

namespace detail {

// Additive closure of a generating set in a finite brace: the least subset
// containing zero and the generators that is closed under + (finiteness then
// gives negation for free, but generators' negatives are seeded anyway).
// Returns a sorted index list.
template <FiniteBrace B>
std::vector<std::uint32_t> additive_closure(const B& b,
                                            const std::vector<std::uint32_t>& gens) {
  const std::uint32_t n = b.size();
  std::vector<char> in(n, 0);
  std::vector<std::uint32_t> members;
  auto insert = [&](std::uint32_t e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
    }
  };
  insert(b.index(b.zero()));
  for (std::uint32_t g : gens) {
    insert(g);
    insert(b.index(b.neg(b.element(g))));
  }
  // Pairwise sums; `members` grows while scanning, so every pair of final
  // members is eventually visited.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      insert(b.index(b.add(b.element(members[i]), b.element(members[j]))));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace detail

}  // namespace braces
