// Verification strategies and check reports.
//
// Every verifier in the library produces CheckResult values: pass/fail plus a
// replayable witness. Exhaustive runs scan tuples in table order and report
// the first violation; sampled runs draw tuples from a seeded generator so
// failures reproduce from the recorded seed.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace braces {

// Deterministic source of sampled tuples. mt19937_64 has a fully specified
// output sequence, and the bounded draws below avoid the implementation-
// defined std::uniform_int_distribution, so identical seeds give identical
// tuples on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform-ish draw in [lo, hi]; modulo bias is irrelevant for test-tuple
  // generation and keeps the sequence platform-stable.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % span);
  }

  std::uint32_t index(std::uint32_t n) {
    return static_cast<std::uint32_t>(gen_() % n);
  }

 private:
  std::mt19937_64 gen_;
};

struct Exhaustive {};

struct Sampled {
  std::uint64_t count = 10000;
  std::uint64_t seed = 0;
};

using Strategy = std::variant<Exhaustive, Sampled>;

inline bool is_sampled(const Strategy& s) {
  return std::holds_alternative<Sampled>(s);
}

// Requested an exhaustive scan over a carrier that cannot be enumerated.
class UnsupportedStrategy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Outcome of one named check. Failed ⇔ witness non-empty; the witness tuple
// re-evaluates to a violation of the identity named in `detail`.
template <typename E>
struct CheckResult {
  std::string name;
  std::string detail;     // sub-identity that failed; empty while passing
  std::vector<E> witness; // empty iff passed
  std::uint64_t tuples = 0;
  std::optional<std::uint64_t> seed;

  bool passed() const noexcept { return witness.empty(); }
};

}  // namespace braces
