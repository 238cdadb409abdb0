#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace idealkit {

// Dense univariate polynomial over a field; c[i] is the coefficient of t^i.
class UPoly {
 public:
  explicit UPoly(Coeff zero) : zero_(std::move(zero)) {}
  UPoly(std::vector<Coeff> c, Coeff zero);
  static UPoly from_polynomial(const Polynomial& p, std::size_t var);
  static UPoly monomial(const Coeff& c, std::size_t deg, const Coeff& zero);
  Polynomial to_polynomial(const Ring& ring, std::size_t var) const;

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Coeff& operator[](std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const Coeff& lc() const { return c_.back(); }
  const std::vector<Coeff>& coeffs() const { return c_; }
  const Coeff& zero() const { return zero_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Coeff& s) const;
  UPoly monic() const;
  UPoly derivative() const;
  // Quotient and remainder; divisor nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly mod(const UPoly& d) const { return divmod(d).second; }
  Coeff evaluate(const Coeff& x) const;

  friend bool operator==(const UPoly& a, const UPoly& b);

 private:
  void trim();
  std::vector<Coeff> c_;
  Coeff zero_;
};

UPoly gcd(UPoly a, UPoly b);
UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& m);

// Monic gcd of univariate polynomials in `var` over any field.
Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, std::size_t var);

struct Irreducibility {
  enum class Kind { kIrreducible, kFactor, kUnknown };
  Kind kind = Kind::kUnknown;
  std::optional<Polynomial> factor;  // proper divisor for kFactor
  std::string reason;
};

// Exact over Fp for univariate input; over Q exact up to degree 3 and via modular degree
// patterns plus an exhaustive Kronecker factor search beyond; multivariate by structural
// rules, univariate-in-a-monomial reduction and brute force over small prime fields.
Irreducibility is_irreducible(const Polynomial& f);

// Distinct-degree factor degrees of a squarefree monic polynomial over Fp.
std::vector<long> distinct_degree_pattern(const UPoly& f);

}  // namespace idealkit
