// The set-theoretic Yang-Baxter map attached to a finite left brace:
// r(x, y) = (u, v) with u = lambda_x(y) = xy - x and v = u^{-1}·x·y, stored
// as a full function table, plus exhaustive verification of the braid
// relation, involutivity, and non-degeneracy.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braces/cayley.hpp"
#include "braces/check.hpp"
#include "braces/core.hpp"

namespace braces {

struct YbeMap {
  std::uint32_t n = 0;
  std::vector<std::string> labels;
  // r(x, y) = (left[x*n + y], right[x*n + y])
  std::vector<std::uint32_t> left;
  std::vector<std::uint32_t> right;
  std::string describe;

  std::pair<std::uint32_t, std::uint32_t> apply(std::uint32_t x,
                                                std::uint32_t y) const {
    std::size_t at = static_cast<std::size_t>(x) * n + y;
    return {left[at], right[at]};
  }
};

// Assembles a YbeMap from explicit component tables, validating shape.
inline YbeMap make_ybe_map(std::vector<std::string> labels,
                           std::vector<std::uint32_t> left,
                           std::vector<std::uint32_t> right,
                           std::string describe) {
  YbeMap m;
  m.n = static_cast<std::uint32_t>(labels.size());
  if (m.n == 0) throw DomainError("empty YBE carrier");
  const std::size_t nn = static_cast<std::size_t>(m.n) * m.n;
  if (left.size() != nn || right.size() != nn)
    throw DomainError("YBE table dimensions do not match carrier size");
  for (std::uint32_t v : left)
    if (v >= m.n) throw DomainError("YBE table entry out of range");
  for (std::uint32_t v : right)
    if (v >= m.n) throw DomainError("YBE table entry out of range");
  m.labels = std::move(labels);
  m.left = std::move(left);
  m.right = std::move(right);
  m.describe = std::move(describe);
  return m;
}

inline YbeMap derive_solution(const CayleyBrace& b) {
  const std::uint32_t n = b.size();
  std::vector<std::uint32_t> left(static_cast<std::size_t>(n) * n);
  std::vector<std::uint32_t> right(left.size());
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint32_t u = lambda_map(b, x, y);
      std::uint32_t v = b.mul(b.mul(b.inv(u), x), y);
      std::size_t at = static_cast<std::size_t>(x) * n + y;
      left[at] = u;
      right[at] = v;
    }
  return make_ybe_map(b.labels(), std::move(left), std::move(right),
                      "solution from " + b.describe());
}

// r12 r23 r12 = r23 r12 r23 on all of X^3; witness is the first violating
// triple in table order.
inline CheckResult<std::uint32_t> check_braid(const YbeMap& m) {
  CheckResult<std::uint32_t> out;
  out.name = "braid";
  const std::uint32_t n = m.n;
  auto r12 = [&](std::uint32_t t[3]) {
    auto [u, v] = m.apply(t[0], t[1]);
    t[0] = u;
    t[1] = v;
  };
  auto r23 = [&](std::uint32_t t[3]) {
    auto [u, v] = m.apply(t[1], t[2]);
    t[1] = u;
    t[2] = v;
  };
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z) {
        std::uint32_t lhs[3] = {x, y, z};
        std::uint32_t rhs[3] = {x, y, z};
        r12(lhs);
        r23(lhs);
        r12(lhs);
        r23(rhs);
        r12(rhs);
        r23(rhs);
        out.tuples += 1;
        if (lhs[0] != rhs[0] || lhs[1] != rhs[1] || lhs[2] != rhs[2]) {
          out.detail = "r12 r23 r12 != r23 r12 r23";
          out.witness = {x, y, z};
          return out;
        }
      }
  return out;
}

// r(r(x, y)) = (x, y) on all pairs.
inline CheckResult<std::uint32_t> check_involutive(const YbeMap& m) {
  CheckResult<std::uint32_t> out;
  out.name = "involutive";
  for (std::uint32_t x = 0; x < m.n; ++x)
    for (std::uint32_t y = 0; y < m.n; ++y) {
      auto [u, v] = m.apply(x, y);
      auto [p, q] = m.apply(u, v);
      out.tuples += 1;
      if (p != x || q != y) {
        out.detail = "r(r(x,y)) != (x,y)";
        out.witness = {x, y};
        return out;
      }
    }
  return out;
}

// For each fixed x, y -> first component is a bijection; for each fixed y,
// x -> second component is a bijection.
inline CheckResult<std::uint32_t> check_nondegenerate(const YbeMap& m) {
  CheckResult<std::uint32_t> out;
  out.name = "non-degenerate";
  const std::uint32_t n = m.n;
  std::vector<std::uint32_t> seen(n);
  std::vector<std::uint32_t> first(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint32_t u = m.apply(x, y).first;
      out.tuples += 1;
      if (seen[u] == x) {
        out.detail = "y -> lambda_x(y) not injective at fixed x";
        out.witness = {x, first[u], y};
        return out;
      }
      seen[u] = x;
      first[u] = y;
    }
  }
  for (std::uint32_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint32_t v = m.apply(x, y).second;
      out.tuples += 1;
      if (seen[v] == y) {
        out.detail = "x -> rho_y(x) not injective at fixed y";
        out.witness = {first[v], x, y};
        return out;
      }
      seen[v] = y;
      first[v] = x;
    }
  }
  return out;
}

inline std::vector<CheckResult<std::uint32_t>> check_solution(const YbeMap& m) {
  std::vector<CheckResult<std::uint32_t>> out;
  out.push_back(check_braid(m));
  out.push_back(check_involutive(m));
  out.push_back(check_nondegenerate(m));
  return out;
}

// True when r(x, y) = (y, x) everywhere — the solution of a trivial brace.
inline bool is_flip(const YbeMap& m) {
  for (std::uint32_t x = 0; x < m.n; ++x)
    for (std::uint32_t y = 0; y < m.n; ++y)
      if (m.apply(x, y) != std::pair<std::uint32_t, std::uint32_t>{y, x})
        return false;
  return true;
}

}  // namespace braces
