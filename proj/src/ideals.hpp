#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "groebner.hpp"

namespace idealkit {

// I ∩ k[keep]; the result lives in the subring on `keep` (ascending indices).
Ideal eliminate(const Ideal& ideal, std::vector<std::size_t> keep);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal quotient_by_poly(const Ideal& ideal, const Polynomial& f);
Ideal saturate_by_poly(const Ideal& ideal, const Polynomial& g);
// I : (k[base] \ {0})^∞.
Ideal saturate_by_subring(const Ideal& ideal, std::vector<std::size_t> base);

struct MinimalPolynomial {
  Polynomial poly;  // ring: base variables (ascending) followed by Y
  std::vector<std::size_t> base;
  std::size_t y_var = 0;
  std::uint32_t y_degree() const { return poly.degree_in(y_var); }
};

// Least Y-degree element of (I, Y - u) ∩ k[base, Y]; nullopt when that ideal is zero.
std::optional<MinimalPolynomial> minimal_poly_mod_ideal(const Ideal& ideal, const Polynomial& u,
                                                        std::vector<std::size_t> base);

struct DegreeSlice {
  std::uint32_t degree = 0;
  // Echelon basis of I restricted to degree <= degree; leading monomials are distinct.
  std::vector<Polynomial> basis;
  std::size_t dimension() const { return basis.size(); }
};

DegreeSlice degree_slice(const Ideal& ideal, std::uint32_t b,
                         const MonomialOrder& order = MonomialOrder::grevlex());

// Solves sum_j coeffs[i][j] * Y_j = rhs[i] with deg Y_j <= cap.
std::optional<std::vector<Polynomial>> solve_linear_system_capped(
    const std::vector<std::vector<Polynomial>>& coeffs, const std::vector<Polynomial>& rhs, std::uint32_t cap);

}  // namespace idealkit
