#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace idealkit {

enum class EnumerationMode { kExhaustive, kWitnessSearch };

struct EnumerationOptions {
  // Exhaustive mode refuses when q^(#monomials of degree <= b) exceeds this.
  std::uint64_t cap = std::uint64_t{1} << 22;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::size_t random_per_degree = 200;
};

struct PrimalityVerdict {
  enum class Status { kPrimeUpTo, kCounterexample, kUndetermined };
  Status status = Status::kUndetermined;
  std::uint32_t bound = 0;
  // Counterexample: f*g in I, f and g not in I, both of degree <= bound.
  std::optional<Polynomial> f, g;
  std::string reason;
  std::uint64_t candidates = 0;
};

// Throws ImproperIdeal on the unit ideal, InfeasibleEnumeration when exhaustive mode is refused.
PrimalityVerdict prime_up_to(const Ideal& ideal, std::uint32_t b, EnumerationMode mode,
                             const EnumerationOptions& options = {});

struct MaximalityVerdict {
  enum class Status { kMaximalUpTo, kNonInvertible, kUndetermined };
  Status status = Status::kUndetermined;
  std::uint32_t bound = 0;
  std::optional<Polynomial> f;  // not in I and not invertible modulo I
  std::string reason;
  std::uint64_t candidates = 0;
};

MaximalityVerdict maximal_up_to(const Ideal& ideal, std::uint32_t b, EnumerationMode mode,
                                const EnumerationOptions& options = {});

struct OracleVerdict {
  enum class Status { kPrime, kNotPrime, kUnknown };
  Status status = Status::kUnknown;
  // Factor pair for NotPrime; absent for the unit ideal.
  std::optional<Polynomial> f, g;
  std::string reason;
};

// Exact for the zero ideal, one variable, principal ideals with decided irreducibility and linear generators.
OracleVerdict primality_oracle_small(const Ideal& ideal);

struct NoetherStep {
  std::vector<std::uint32_t> a;  // exponents for x_1..x_{n-1}
  Coeff c;
  // c * f(x_1 + x_n^a_1, ..., x_{n-1} + x_n^a_{n-1}, x_n), monic in the last variable; a_i = 0 leaves x_i fixed.
  Polynomial transformed;
};

NoetherStep noether_normalize_step(const Polynomial& f);

const char* to_string(PrimalityVerdict::Status s);
const char* to_string(MaximalityVerdict::Status s);
const char* to_string(OracleVerdict::Status s);

}  // namespace idealkit
