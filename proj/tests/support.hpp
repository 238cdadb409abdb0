#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "field.hpp"
#include "groebner.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "ring.hpp"

namespace idealkit::testing {

inline Ring make_ring(const std::string& field, std::vector<std::string> vars) {
  return Ring(Field::parse(field), std::move(vars));
}

inline Polynomial P(const Ring& ring, const std::string& text) { return parse_polynomial(text, ring); }

inline std::vector<Polynomial> Ps(const Ring& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(ring, t));
  return out;
}

inline Ideal I(const Ring& ring, const std::vector<std::string>& texts) { return Ideal(ring, Ps(ring, texts)); }

// Same elements regardless of order.
inline bool same_set(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    bool found = false;
    for (auto it = b.begin(); it != b.end(); ++it)
      if (*it == x) {
        b.erase(it);
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// Seeded generator of random algebraic objects; identical seeds give identical streams.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1))];
  }
  std::mt19937_64& engine() { return rng_; }

  Coeff coeff(const Field& field, bool nonzero = false) {
    for (;;) {
      Coeff c = raw_coeff(field);
      if (!nonzero || !c.is_zero()) return c;
    }
  }

  Monomial monomial(std::size_t nvars, std::uint32_t max_deg) {
    Monomial m(nvars);
    if (nvars == 0) return m;
    auto deg = static_cast<std::uint32_t>(range(0, max_deg));
    for (std::uint32_t k = 0; k < deg; ++k) {
      auto v = static_cast<std::size_t>(range(0, static_cast<long>(nvars) - 1));
      m.set(v, m[v] + 1);
    }
    return m;
  }

  Polynomial poly(const Ring& ring, std::uint32_t max_deg, std::size_t max_terms) {
    std::vector<Term> terms;
    auto count = static_cast<std::size_t>(range(1, static_cast<long>(max_terms)));
    for (std::size_t i = 0; i < count; ++i) terms.push_back({monomial(ring.nvars(), max_deg), coeff(ring.field())});
    return Polynomial(ring, std::move(terms));
  }

  Polynomial nonzero_poly(const Ring& ring, std::uint32_t max_deg, std::size_t max_terms) {
    for (;;) {
      auto p = poly(ring, max_deg, max_terms);
      if (!p.is_zero()) return p;
    }
  }

  // Nonconstant generators with at least one of degree exactly `deg`.
  Ideal ideal(const Ring& ring, std::size_t max_gens, std::uint32_t deg, std::size_t max_terms) {
    std::vector<Polynomial> gens;
    auto count = static_cast<std::size_t>(range(1, static_cast<long>(max_gens)));
    while (gens.size() < count) {
      auto p = nonzero_poly(ring, deg, max_terms);
      if (gens.empty() && p.total_degree() != deg) continue;
      if (p.is_constant()) continue;
      gens.push_back(p);
    }
    return Ideal(ring, gens);
  }

 private:
  Coeff raw_coeff(const Field& field) {
    switch (field.kind()) {
      case Field::Kind::kPrime:
        return field.from_integer(range(0, static_cast<long>(field.modulus()) - 1));
      case Field::Kind::kRational:
        return field.from_rational(mpq_class(range(-5, 5), range(1, 4)));
      case Field::Kind::kRationalFunction: {
        const Ring& pr = field.parameter_ring();
        auto num = poly(pr, 2, 2);
        auto den = nonzero_poly(pr, 2, 2);
        return Coeff::rational_function(num, den);
      }
    }
    return field.zero();
  }

  std::mt19937_64 rng_;
};

// Every polynomial over a prime field whose support lies in `monos`.
inline std::vector<Polynomial> all_polynomials(const Ring& ring, const std::vector<Monomial>& monos) {
  std::vector<Polynomial> out;
  const auto q = ring.field().modulus();
  std::vector<std::uint32_t> digits(monos.size(), 0);
  for (;;) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (digits[i]) terms.push_back({monos[i], ring.field().from_integer(digits[i])});
    out.push_back(Polynomial(ring, std::move(terms)));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

}  // namespace idealkit::testing
