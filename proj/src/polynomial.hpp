#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "ring.hpp"

namespace idealkit {

struct Term {
  Monomial mono;
  Coeff coeff;
};

// Sparse polynomial; terms are kept in descending grevlex order with nonzero coefficients.
class Polynomial {
 public:
  static constexpr std::int64_t kMinusInfinity = std::numeric_limits<std::int64_t>::min();

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, std::vector<Term> terms);
  // Terms already in canonical order, combined, nonzero.
  static Polynomial from_canonical(Ring ring, std::vector<Term> terms);
  static Polynomial constant(const Ring& ring, const Coeff& c);
  static Polynomial constant(const Ring& ring, long c) { return constant(ring, ring.field().from_integer(c)); }
  static Polynomial variable(const Ring& ring, std::size_t i);
  static Polynomial term(const Ring& ring, const Monomial& m, const Coeff& c);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff.is_one(); }
  // kMinusInfinity for the zero polynomial.
  std::int64_t total_degree() const { return terms_.empty() ? kMinusInfinity : terms_[0].mono.degree(); }
  std::uint32_t degree_in(std::size_t var) const;
  Coeff constant_term() const;
  Coeff coefficient(const Monomial& m) const;

  // Throws ZeroPolynomial on the zero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;
  const Monomial& leading_monomial(const MonomialOrder& order) const { return leading_term(order).mono; }
  const Coeff& leading_coeff(const MonomialOrder& order) const { return leading_term(order).coeff; }
  Polynomial monic(const MonomialOrder& order) const;
  Polynomial monic() const { return monic(MonomialOrder::grevlex()); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Coeff& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial mul_term(const Monomial& m, const Coeff& c) const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(std::size_t var) const;
  // Replaces variable `var` by `value` (same ring).
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  // Ring homomorphism sending variable i to images[i] (all in `target`).
  Polynomial compose(const std::vector<Polynomial>& images, const Ring& target) const;
  // Moves variable i to target variable map[i]; unmapped variables must not occur.
  Polynomial remap(const Ring& target, const std::vector<std::optional<std::size_t>>& map) const;

  std::vector<std::size_t> support() const;
  bool uses_only(const std::vector<bool>& allowed) const;
  // Sum of terms with exponent e in `var`, with that exponent cleared.
  Polynomial coefficient_of(std::size_t var, std::uint32_t e) const;

  std::string to_string() const;
  // Terms listed in descending `order`.
  std::string to_string(const MonomialOrder& order) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void check_ring(const Polynomial& o) const;
  static std::string terms_string(const Ring& ring, const std::vector<Term>& terms);
  Ring ring_;
  std::vector<Term> terms_;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Reduces the greatest reducible monomial first, using the lowest-index applicable divisor.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);
std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g);
// Embeds f into a ring whose leading variables coincide with f's ring.
Polynomial extend_ring(const Polynomial& f, const Ring& target);
// Restricts f to the subring on `keep` (f must not use other variables).
Polynomial restrict_ring(const Polynomial& f, const Ring& target, const std::vector<std::size_t>& keep);
// All monomials in nvars variables of total degree <= deg, ascending grevlex.
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t deg);

namespace detail {

using Terms = std::vector<Term>;

Terms sorted_terms(const Polynomial& p, const MonomialOrder& order);
// a[a_from..] - c*m*b[b_from..]; inputs sorted descending under `order`.
Terms sub_scaled(const Terms& a, std::size_t a_from, const Coeff& c, const Monomial& m, const Terms& b,
                 std::size_t b_from, const MonomialOrder& order);
// Full reduction by `basis` (each sorted under `order`).
Terms reduce(Terms p, const std::vector<const Terms*>& basis, const MonomialOrder& order,
             std::vector<Terms>* quotients = nullptr);

}  // namespace detail

}  // namespace idealkit
