#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "polynomial.hpp"

namespace idealkit {

struct Limits {
  std::size_t max_pairs = 500000;
  std::uint32_t max_degree = 4096;
  // Overrides from IDEALKIT_MAX_PAIRS and IDEALKIT_MAX_DEGREE.
  static Limits from_env();
};

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;  // monic
  bool reduced = false;
  std::shared_ptr<const std::vector<detail::Terms>> sorted;  // elements sorted under `order`

  bool is_zero() const { return elements.empty(); }
  bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
};

GroebnerBasis make_groebner_basis(MonomialOrder order, std::vector<Polynomial> elements, bool reduced);

class Ideal {
 public:
  explicit Ideal(Ring ring) : Ideal(std::move(ring), {}) {}
  // Zero generators are dropped.
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  // Maximum generator degree; kMinusInfinity for the zero ideal.
  std::int64_t max_degree() const;

  // Cached per order; limits come from the environment.
  const GroebnerBasis& groebner_basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;
  bool is_proper() const { return !groebner_basis().is_unit(); }

 private:
  struct Cache;
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

// Normal selection strategy, coprime and chain criteria; returns the reduced basis.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const Limits& limits = Limits::from_env());
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
bool contains(const GroebnerBasis& basis, const Polynomial& f);
bool contains(const Ideal& ideal, const Polynomial& f);
// Every S-polynomial reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);
bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideals_equal(const Ideal& a, const Ideal& b);

}  // namespace idealkit
