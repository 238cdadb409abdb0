#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "ideals.hpp"
#include "univariate.hpp"

namespace idealkit {

// Greedy in ascending variable order: x_i joins when I ∩ k[basis, x_i] = (0). Throws ImproperIdeal.
std::vector<std::size_t> transcendence_basis(const Ideal& ideal);

enum class Tri { kYes, kNo, kUnknown };
const char* to_string(Tri t);

struct MinimalW {
  Polynomial w;  // in the ideal's ring, uses only basis variables and x_j
  std::uint32_t degree = 0;
  Tri irreducible = Tri::kUnknown;
  // Verified factor pair of w with neither factor in I.
  std::optional<Polynomial> f, g;
  std::string reason;
};

// Least x_j-degree element of I ∩ k[basis, x_j], then least total degree of its leading x_j-coefficient.
// Throws NotAlgebraic when that intersection is zero.
MinimalW minimal_w(const Ideal& ideal, const std::vector<std::size_t>& basis, std::size_t j);

struct ContractionResult {
  bool ok = true;
  // On failure: f in k[basis], g not in I, f*g in I.
  std::optional<Polynomial> f, g;
};

ContractionResult contraction_check(const Ideal& ideal, const std::vector<std::size_t>& basis);

// The extension of I to K[others] with K = k(basis), presented by a reduced Groebner basis.
struct Localization {
  Ring source;
  std::vector<std::size_t> basis, others;  // source indices, ascending
  Field field;                             // K
  Ring local;                              // K[others]; local variable i is source variable others[i]
  GroebnerBasis gb;                        // grevlex on `local`
  std::vector<Monomial> standard;          // ascending grevlex; empty when not finite
  bool finite = false;

  Polynomial to_local(const Polynomial& f) const;
  std::size_t quotient_dim() const { return standard.size(); }
  // Coordinates of the normal form on `standard`.
  std::vector<Coeff> coordinates(const Polynomial& f_local) const;
  // Ring K[Y] for characteristic and minimal polynomials.
  Ring y_ring() const;
};

Localization localize(const Ideal& ideal, const std::vector<std::size_t>& basis);

// Divides successively by w_j (ascending j); the result has x_j-degree below deg w_j and differs
// from f by an element of the extension. w is keyed by source index; f is in `local`.
Polynomial reduce_mod_w(const Localization& loc, const Polynomial& f_local, const std::map<std::size_t, Polynomial>& w);

// det(Y*1 - A) for the multiplication matrix A of f on the standard monomials, by fraction-free
// elimination; monic of degree quotient_dim and verified to annihilate f.
Polynomial char_poly_det_trick(const Localization& loc, const Polynomial& f_local,
                               const std::map<std::size_t, Polynomial>& w);

struct PrimitiveElement {
  enum class Status { kFound, kInseparable };
  Status status = Status::kFound;
  Polynomial u;      // in the ideal's ring
  Polynomial h;      // monic in K[Y]
  Polynomial h_int;  // denominator-free multiple in k[basis, Y], basis variables first, Y last
  std::map<std::size_t, Polynomial> phi;  // x_j = phi_j(U) in K[Y] modulo the extension
  std::vector<std::string> scalars;       // accepted scalar per adjoined variable
  std::uint64_t candidates = 0;
  std::string reason;
};

// Scalars are tried as 0, 1, 2, ... then t, t^2, ... for each basis variable t.
// Throws CandidateExhaustion when the counted budget runs out.
PrimitiveElement find_primitive_element(const Ideal& ideal, const Localization& loc,
                                        const std::map<std::size_t, MinimalW>& w);

struct PipelineReport {
  std::size_t r = 0;
  std::vector<std::size_t> basis_vars;
  std::map<std::size_t, Polynomial> w;
  std::map<std::size_t, std::uint32_t> d;
  std::map<std::size_t, Tri> w_irreducible;
  bool contraction_ok = true;
  std::optional<Polynomial> u, h;
  std::map<std::size_t, Polynomial> phi;
  std::size_t quotient_dim = 0;
  Tri j_maximal = Tri::kUnknown;
  Tri i_prime = Tri::kUnknown;
  // Verified witness for i_prime = No: f*g in I with f, g not in I (absent for the unit ideal).
  std::optional<Polynomial> f, g;
  bool inseparable = false;
  std::string easy_case;
  std::vector<std::string> notes;
  // Machine checks performed, each "<claim>: ok".
  std::vector<std::string> certificates;
};

// Throws ImproperIdeal on the unit ideal.
PipelineReport run_pipeline(const Ideal& ideal);

}  // namespace idealkit
