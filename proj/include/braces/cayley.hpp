// Finite braces as Cayley tables: quotients of the free braces D2/D3 modulo
// m, trivial cyclic braces, arbitrary ingested tables, and coefficient
// decomposition with respect to a generator.
//
// Every constructor except `unchecked` runs the full exhaustive axiom suite
// and throws on violation, so a CayleyBrace obtained from a public builder
// is a verified left brace. Elements are carrier indices; labels mirror the
// free-brace coefficient notation, e.g. "(1,0,2)".

#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braces/axioms.hpp"
#include "braces/check.hpp"
#include "braces/core.hpp"

namespace braces {

enum class QuotientFamily { d2, d3 };

inline std::string family_name(QuotientFamily f) {
  return f == QuotientFamily::d2 ? "quotient_d2" : "quotient_d3";
}

struct QuotientSpec {
  QuotientFamily family = QuotientFamily::d3;
  std::int64_t modulus = 0;
};

// Largest admitted carrier. Keeps exhaustive verification at desk scale and
// all intermediate table arithmetic comfortably inside 64 bits.
inline constexpr std::uint32_t kMaxTableOrder = 4096;

// Construction-time rejection: the candidate tables fail a brace axiom.
// Carries the failed check (with index witness) and the witness labels.
class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(const std::string& source, CheckResult<std::uint32_t> failed,
                 std::vector<std::string> witness_labels)
      : std::runtime_error(source + ": axiom check '" + failed.name +
                           "' failed (" + failed.detail + ") at witness " +
                           join(witness_labels)),
        failed_(std::move(failed)),
        witness_labels_(std::move(witness_labels)) {}

  const CheckResult<std::uint32_t>& failed_check() const { return failed_; }
  const std::vector<std::string>& witness_labels() const {
    return witness_labels_;
  }

 private:
  static std::string join(const std::vector<std::string>& labels) {
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ", ";
      out += labels[i];
    }
    return out + "]";
  }

  CheckResult<std::uint32_t> failed_;
  std::vector<std::string> witness_labels_;
};

// d3 quotients require an odd modulus; the even case genuinely breaks
// associativity of the reduced table. The exception carries the concrete
// counterexample found by the axiom suite.
class IllegalModulus : public AxiomViolation {
 public:
  IllegalModulus(QuotientFamily family, std::int64_t modulus,
                 CheckResult<std::uint32_t> failed,
                 std::vector<std::string> witness_labels)
      : AxiomViolation(family_name(family) + " mod " + std::to_string(modulus),
                       std::move(failed), std::move(witness_labels)),
        family_(family),
        modulus_(modulus) {}

  QuotientFamily family() const { return family_; }
  std::int64_t modulus() const { return modulus_; }

 private:
  QuotientFamily family_;
  std::int64_t modulus_;
};

class NotInSubbrace : public DomainError {
 public:
  explicit NotInSubbrace(const std::string& what) : DomainError(what) {}
};

struct Decomposition {
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  std::int64_t k3 = 0;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

class CayleyBrace {
 public:
  using element_type = std::uint32_t;

  // Assembles a brace from raw tables without axiom verification. Intended
  // for test fixtures and as the staging step inside the checked builders.
  // Inverse arrays are derived from the tables; an element with no inverse
  // gets a sentinel and throws only if that inverse is actually requested.
  static CayleyBrace unchecked(std::vector<std::string> labels,
                               std::vector<std::uint32_t> add_table,
                               std::vector<std::uint32_t> mul_table,
                               std::uint32_t zero_index, std::string describe) {
    CayleyBrace b;
    b.labels_ = std::move(labels);
    b.n_ = static_cast<std::uint32_t>(b.labels_.size());
    b.add_ = std::move(add_table);
    b.mul_ = std::move(mul_table);
    b.zero_ = zero_index;
    b.describe_ = std::move(describe);
    if (b.n_ == 0 || b.n_ > kMaxTableOrder)
      throw DomainError("carrier size " + std::to_string(b.n_) +
                        " outside supported range 1.." +
                        std::to_string(kMaxTableOrder));
    const std::size_t nn = static_cast<std::size_t>(b.n_) * b.n_;
    if (b.add_.size() != nn || b.mul_.size() != nn || b.zero_ >= b.n_)
      throw DomainError("table dimensions do not match carrier size");
    for (std::uint32_t v : b.add_)
      if (v >= b.n_) throw DomainError("add table entry out of range");
    for (std::uint32_t v : b.mul_)
      if (v >= b.n_) throw DomainError("mul table entry out of range");
    b.neg_ = derive_inverses(b.add_, b.n_, b.zero_);
    b.inv_ = derive_inverses(b.mul_, b.n_, b.zero_);
    return b;
  }

  std::uint32_t size() const { return n_; }
  element_type element(std::uint32_t i) const {
    assert(i < n_);
    return i;
  }
  std::uint32_t index(element_type x) const {
    check_element(x);
    return x;
  }

  element_type zero() const { return zero_; }
  element_type add(element_type x, element_type y) const {
    check_element(x);
    check_element(y);
    return add_[static_cast<std::size_t>(x) * n_ + y];
  }
  element_type neg(element_type x) const {
    check_element(x);
    return lookup_inverse(neg_, x, "additive");
  }
  element_type mul(element_type x, element_type y) const {
    check_element(x);
    check_element(y);
    return mul_[static_cast<std::size_t>(x) * n_ + y];
  }
  element_type inv(element_type x) const {
    check_element(x);
    return lookup_inverse(inv_, x, "multiplicative");
  }

  element_type sample(Rng& rng) const { return rng.index(n_); }

  std::string format(element_type x) const {
    check_element(x);
    return labels_[x];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& describe() const { return describe_; }

  // The designated generator, when the construction has one (quotient and
  // trivial-cyclic families). Ingested tables carry none.
  std::optional<element_type> generator() const { return generator_; }

 private:
  static std::vector<std::uint32_t> derive_inverses(
      const std::vector<std::uint32_t>& table, std::uint32_t n,
      std::uint32_t zero) {
    std::vector<std::uint32_t> inv(n, n);  // n = "no inverse" sentinel
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (table[static_cast<std::size_t>(i) * n + j] == zero) {
          inv[i] = j;
          break;
        }
    return inv;
  }

  std::uint32_t lookup_inverse(const std::vector<std::uint32_t>& inv,
                               element_type x, const char* kind) const {
    if (inv[x] == n_)
      throw DomainError(std::string("element ") + labels_[x] + " has no " +
                        kind + " inverse");
    return inv[x];
  }

  void check_element(element_type x) const {
    if (x >= n_)
      throw DomainError("element index " + std::to_string(x) +
                        " outside carrier of size " + std::to_string(n_));
  }

  std::uint32_t n_ = 0;
  std::uint32_t zero_ = 0;
  std::optional<element_type> generator_;
  std::string describe_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;

  friend CayleyBrace build_quotient(const QuotientSpec&);
  friend CayleyBrace build_trivial_cyclic(std::int64_t);
  friend CayleyBrace from_tables(std::vector<std::string>,
                                 std::vector<std::uint32_t>,
                                 std::vector<std::uint32_t>, std::string);
};

namespace detail {

// Runs the exhaustive axiom suite; returns the first failed check, if any.
inline std::optional<CheckResult<std::uint32_t>> first_axiom_failure(
    const CayleyBrace& b) {
  for (auto& check : check_brace_axioms(b, Exhaustive{}))
    if (!check.passed()) return std::move(check);
  return std::nullopt;
}

inline std::vector<std::string> witness_labels(
    const CayleyBrace& b, const CheckResult<std::uint32_t>& check) {
  std::vector<std::string> out;
  out.reserve(check.witness.size());
  for (std::uint32_t w : check.witness) out.push_back(b.format(w));
  return out;
}

}  // namespace detail

// Quotient of D2 (or D3) modulo m: the free closed-form product evaluated on
// canonical representatives in [0, m) and reduced. The result is verified
// exhaustively; d3 with even m fails associativity and is rejected with the
// first counterexample in table order.
inline CayleyBrace build_quotient(const QuotientSpec& spec) {
  const std::int64_t m = spec.modulus;
  if (m < 2) throw DomainError("quotient modulus must be >= 2");
  const bool d3 = spec.family == QuotientFamily::d3;
  const std::int64_t order64 = d3 ? m * m * m : m * m;
  if (order64 > kMaxTableOrder)
    throw DomainError("quotient order " + std::to_string(order64) +
                      " exceeds supported maximum " +
                      std::to_string(kMaxTableOrder));
  const std::uint32_t n = static_cast<std::uint32_t>(order64);

  // Element index = k1 + m*k2 (+ m^2*k3): k1 varies fastest.
  auto coeff = [&](std::uint32_t idx, int j) -> std::int64_t {
    std::int64_t v = idx;
    for (int s = 0; s < j; ++s) v /= m;
    return v % m;
  };
  auto reduce = [&](std::int64_t v) -> std::int64_t {
    v %= m;
    return v < 0 ? v + m : v;
  };

  std::vector<std::string> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::string l = "(" + std::to_string(coeff(i, 0)) + "," +
                    std::to_string(coeff(i, 1));
    if (d3) l += "," + std::to_string(coeff(i, 2));
    labels[i] = l + ")";
  }

  std::vector<std::uint32_t> add(static_cast<std::size_t>(n) * n);
  std::vector<std::uint32_t> mul(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::int64_t k1 = coeff(i, 0), k2 = coeff(i, 1),
                       k3 = d3 ? coeff(i, 2) : 0;
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::int64_t t1 = coeff(j, 0), t2 = coeff(j, 1),
                         t3 = d3 ? coeff(j, 2) : 0;
      std::int64_t s1 = reduce(k1 + t1);
      std::int64_t s2 = reduce(k2 + t2);
      std::int64_t p1 = reduce(k1 + t1);
      std::int64_t p2 = reduce(k1 * t1 + k2 + t2);
      std::size_t at = static_cast<std::size_t>(i) * n + j;
      if (d3) {
        std::int64_t s3 = reduce(k3 + t3);
        // Half-coefficient h = k2 + (k1 - k1^2)/2 is an exact integer:
        // k1 - k1^2 is a product of consecutive integers.
        std::int64_t h = k2 + (k1 - k1 * k1) / 2;
        std::int64_t p3 = reduce(k3 + t3 + h * t1);
        add[at] = static_cast<std::uint32_t>(s1 + m * (s2 + m * s3));
        mul[at] = static_cast<std::uint32_t>(p1 + m * (p2 + m * p3));
      } else {
        add[at] = static_cast<std::uint32_t>(s1 + m * s2);
        mul[at] = static_cast<std::uint32_t>(p1 + m * p2);
      }
    }
  }

  CayleyBrace b = CayleyBrace::unchecked(
      std::move(labels), std::move(add), std::move(mul), 0,
      family_name(spec.family) + " mod " + std::to_string(m));
  b.generator_ = 1;  // (1,0) resp. (1,0,0)
  if (auto failed = detail::first_axiom_failure(b)) {
    auto witness = detail::witness_labels(b, *failed);
    throw IllegalModulus(spec.family, m, std::move(*failed),
                         std::move(witness));
  }
  return b;
}

// The trivial (abelian) brace on Z/m: multiplication equals addition, every
// star vanishes.
inline CayleyBrace build_trivial_cyclic(std::int64_t m) {
  if (m < 1) throw DomainError("trivial cyclic modulus must be >= 1");
  if (m > kMaxTableOrder)
    throw DomainError("order " + std::to_string(m) +
                      " exceeds supported maximum " +
                      std::to_string(kMaxTableOrder));
  const std::uint32_t n = static_cast<std::uint32_t>(m);
  std::vector<std::string> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  std::vector<std::uint32_t> add(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      add[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  std::vector<std::uint32_t> mul = add;
  CayleyBrace b = CayleyBrace::unchecked(std::move(labels), std::move(add),
                                         std::move(mul), 0,
                                         "trivial_cyclic mod " +
                                             std::to_string(m));
  b.generator_ = n > 1 ? 1 : 0;
  if (auto failed = detail::first_axiom_failure(b)) {
    auto witness = detail::witness_labels(b, *failed);
    throw AxiomViolation(b.describe(), std::move(*failed), std::move(witness));
  }
  return b;
}

// Builds a brace from explicit tables (the ingest path). The additive
// identity is located in the add table; the full axiom suite then accepts or
// rejects with the specific failed axiom and witness.
inline CayleyBrace from_tables(std::vector<std::string> labels,
                               std::vector<std::uint32_t> add_table,
                               std::vector<std::uint32_t> mul_table,
                               std::string describe) {
  const std::uint32_t n = static_cast<std::uint32_t>(labels.size());
  if (n == 0) throw DomainError("empty carrier");
  if (add_table.size() != static_cast<std::size_t>(n) * n ||
      mul_table.size() != static_cast<std::size_t>(n) * n)
    throw DomainError("table dimensions do not match carrier size");

  std::optional<std::uint32_t> zero;
  for (std::uint32_t e = 0; e < n && !zero; ++e) {
    bool neutral = true;
    for (std::uint32_t x = 0; x < n && neutral; ++x)
      neutral = add_table[static_cast<std::size_t>(e) * n + x] == x &&
                add_table[static_cast<std::size_t>(x) * n + e] == x;
    if (neutral) zero = e;
  }
  if (!zero) {
    CheckResult<std::uint32_t> failed;
    failed.name = "abelian-addition";
    failed.detail = "no additive identity element in add table";
    failed.witness = {0};
    throw AxiomViolation(describe, std::move(failed), {labels[0]});
  }

  CayleyBrace b =
      CayleyBrace::unchecked(std::move(labels), std::move(add_table),
                             std::move(mul_table), *zero, std::move(describe));
  if (auto failed = detail::first_axiom_failure(b)) {
    auto witness = detail::witness_labels(b, *failed);
    throw AxiomViolation(b.describe(), std::move(*failed), std::move(witness));
  }
  return b;
}

// Least r >= 1 with r*x = 0 in the additive group.
inline std::uint32_t additive_order(const CayleyBrace& b,
                                    CayleyBrace::element_type x) {
  std::uint32_t r = 1;
  CayleyBrace::element_type acc = x;
  while (acc != b.zero()) {
    acc = b.add(acc, x);
    ++r;
    if (r > b.size()) throw DomainError("additive order exceeds carrier size");
  }
  return r;
}

// Finds (k1, k2, k3) with x = k1*a1 + k2*a2 + k3*a3, where a1 = a,
// a_{j+1} = a_j * a, by brute force over coefficients bounded by the
// additive orders. Requires a one-generator brace with A^3 = <0> (the
// caller's contract); throws NotInSubbrace when no decomposition exists.
inline Decomposition decompose(const CayleyBrace& b,
                               CayleyBrace::element_type a,
                               CayleyBrace::element_type x) {
  using E = CayleyBrace::element_type;
  const E a1 = a;
  const E a2 = star(b, a1, a);
  const E a3 = star(b, a2, a);
  const std::uint32_t o1 = additive_order(b, a1);
  const std::uint32_t o2 = additive_order(b, a2);
  const std::uint32_t o3 = additive_order(b, a3);

  E acc1 = b.zero();
  for (std::uint32_t k1 = 0; k1 < o1; ++k1) {
    E acc2 = acc1;
    for (std::uint32_t k2 = 0; k2 < o2; ++k2) {
      E acc3 = acc2;
      for (std::uint32_t k3 = 0; k3 < o3; ++k3) {
        if (acc3 == x)
          return Decomposition{static_cast<std::int64_t>(k1),
                               static_cast<std::int64_t>(k2),
                               static_cast<std::int64_t>(k3)};
        acc3 = b.add(acc3, a3);
      }
      acc2 = b.add(acc2, a2);
    }
    acc1 = b.add(acc1, a1);
  }
  throw NotInSubbrace("element " + b.format(x) +
                      " is not in the subbrace generated by " + b.format(a));
}

}  // namespace braces
