#include "ideals.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"
#include "linalg.hpp"

namespace idealkit {

namespace {

std::vector<std::size_t> normalized_vars(std::vector<std::size_t> vs, std::size_t nvars) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (auto v : vs)
    if (v >= nvars) fail(ErrorCode::kInvalidArgument, "variable index out of range");
  return vs;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& vs, std::size_t nvars) {
  std::vector<bool> in(nvars, false);
  for (auto v : vs) in[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

// Generators of ideal ∩ k[keep] mapped into `target` (whose variables are `keep` in order).
std::vector<Polynomial> eliminate_into(const Ideal& ideal, const std::vector<std::size_t>& keep,
                                       const Ring& target, const MonomialOrder& order) {
  const auto& gb = ideal.groebner_basis(order);
  std::vector<bool> allowed(ideal.ring().nvars(), false);
  for (auto v : keep) allowed[v] = true;
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements)
    if (g.uses_only(allowed)) out.push_back(restrict_ring(g, target, keep));
  return out;
}

std::vector<std::size_t> prefix(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Polynomial in `ext` obtained from f in the original prefix ring.
std::vector<Polynomial> lift_all(const std::vector<Polynomial>& fs, const Ring& ext) {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(extend_ring(f, ext));
  return out;
}

}  // namespace

Ideal eliminate(const Ideal& ideal, std::vector<std::size_t> keep) {
  const Ring& ring = ideal.ring();
  keep = normalized_vars(std::move(keep), ring.nvars());
  auto drop = complement(keep, ring.nvars());
  Ring target = drop.empty() ? ring : ring.subring(keep);
  if (ideal.is_zero()) return Ideal(target);
  auto order = MonomialOrder::elimination(ring.nvars(), drop);
  return Ideal(target, eliminate_into(ideal, keep, target, order));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) fail(ErrorCode::kMixedRings, "ideals live in different rings");
  const Ring& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);
  Ring ext = ring.extended({ring.fresh_name("w")});
  std::size_t w = ring.nvars();
  Polynomial wv = Polynomial::variable(ext, w);
  Polynomial one_minus_w = Polynomial::constant(ext, ext.field().one()) - wv;
  std::vector<Polynomial> gens;
  for (const auto& f : lift_all(a.generators(), ext)) gens.push_back(wv * f);
  for (const auto& g : lift_all(b.generators(), ext)) gens.push_back(one_minus_w * g);
  auto order = MonomialOrder::elimination(ext.nvars(), {w});
  return Ideal(ring, eliminate_into(Ideal(ext, gens), prefix(ring.nvars()), ring, order));
}

Ideal quotient_by_poly(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) fail(ErrorCode::kZeroPolynomial, "quotient by the zero polynomial");
  if (f.ring() != ideal.ring()) fail(ErrorCode::kMixedRings, "polynomial ring differs from ideal ring");
  const Ring& ring = ideal.ring();
  if (ideal.is_zero()) return Ideal(ring);
  if (f.is_constant()) return ideal;
  Ideal meet = intersect(ideal, Ideal(ring, {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    auto q = exact_quotient(g, f);
    if (!q) fail(ErrorCode::kInexactDivision, "intersection generator not divisible by f");
    gens.push_back(std::move(*q));
  }
  return Ideal(ring, std::move(gens));
}

Ideal saturate_by_poly(const Ideal& ideal, const Polynomial& g) {
  if (g.ring() != ideal.ring()) fail(ErrorCode::kMixedRings, "polynomial ring differs from ideal ring");
  const Ring& ring = ideal.ring();
  if (g.is_zero()) return Ideal(ring, {Polynomial::constant(ring, ring.field().one())});
  if (g.is_constant() || ideal.is_zero()) return ideal;
  Ring ext = ring.extended({ring.fresh_name("w")});
  std::size_t w = ring.nvars();
  std::vector<Polynomial> gens = lift_all(ideal.generators(), ext);
  gens.push_back(Polynomial::variable(ext, w) * extend_ring(g, ext) - Polynomial::constant(ext, ext.field().one()));
  auto order = MonomialOrder::elimination(ext.nvars(), {w});
  return Ideal(ring, eliminate_into(Ideal(ext, gens), prefix(ring.nvars()), ring, order));
}

Ideal saturate_by_subring(const Ideal& ideal, std::vector<std::size_t> base) {
  if (ideal.is_zero()) fail(ErrorCode::kZeroIdeal, "saturation of the zero ideal");
  const Ring& ring = ideal.ring();
  base = normalized_vars(std::move(base), ring.nvars());
  if (base.empty()) return ideal;
  auto nonbase = complement(base, ring.nvars());
  auto order = MonomialOrder::elimination(ring.nvars(), nonbase);
  const auto& gb = ideal.groebner_basis(order);
  std::vector<Polynomial> lcs;
  for (const auto& g : gb.elements) {
    const Monomial& lm = g.leading_monomial(order);
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      bool same = true;
      for (auto v : nonbase)
        if (t.mono[v] != lm[v]) same = false;
      if (!same) continue;
      Monomial m = t.mono;
      for (auto v : nonbase) m.set(v, 0);
      ts.push_back({m, t.coeff});
    }
    Polynomial lc = Polynomial(ring, std::move(ts)).monic();
    if (lc.is_constant()) continue;
    if (std::find(lcs.begin(), lcs.end(), lc) == lcs.end()) lcs.push_back(std::move(lc));
  }
  Ideal out = ideal;
  for (const auto& lc : lcs) out = saturate_by_poly(out, lc);
  return out;
}

std::optional<MinimalPolynomial> minimal_poly_mod_ideal(const Ideal& ideal, const Polynomial& u,
                                                        std::vector<std::size_t> base) {
  if (u.ring() != ideal.ring()) fail(ErrorCode::kMixedRings, "element ring differs from ideal ring");
  const Ring& ring = ideal.ring();
  base = normalized_vars(std::move(base), ring.nvars());
  Ring ext = ring.extended({ring.fresh_name("Y")});
  std::size_t y = ring.nvars();
  std::vector<Polynomial> gens = lift_all(ideal.generators(), ext);
  gens.push_back(Polynomial::variable(ext, y) - extend_ring(u, ext));
  MonomialOrder::Block elim{complement(base, ring.nvars()), MonomialOrder::Kind::kGrevlex};
  MonomialOrder::Block yblk{{y}, MonomialOrder::Kind::kGrevlex};
  MonomialOrder::Block bblk{base, MonomialOrder::Kind::kGrevlex};
  auto order = MonomialOrder::block({elim, yblk, bblk});
  std::vector<std::size_t> keep = base;
  keep.push_back(y);
  Ring target = ext.subring(keep);
  auto cands = eliminate_into(Ideal(ext, gens), keep, target, order);
  if (cands.empty()) return std::nullopt;
  std::size_t ty = base.size();
  for (const auto& c : cands) {
    if (c.degree_in(ty) > 0) continue;
    if (c.is_constant()) fail(ErrorCode::kImproperIdeal, "ideal contains 1");
    fail(ErrorCode::kInvalidArgument, "base variables are algebraically dependent modulo the ideal");
  }
  auto key = [&](const Polynomial& p) {
    std::uint32_t n = p.degree_in(ty);
    return std::make_pair(n, p.coefficient_of(ty, n).total_degree());
  };
  auto lex_less = [](const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = grevlex_compare(a.terms()[i].mono, b.terms()[i].mono);
      if (c != 0) return c > 0;
      int k = a.terms()[i].coeff.compare_key(b.terms()[i].coeff);
      if (k != 0) return k < 0;
    }
    return a.size() < b.size();
  };
  const Polynomial* best = &cands[0];
  for (const auto& c : cands) {
    auto kc = key(c), kb = key(*best);
    if (kc < kb || (kc == kb && lex_less(c, *best))) best = &c;
  }
  Polynomial lc = best->coefficient_of(ty, best->degree_in(ty));
  Polynomial q = *best;
  if (lc.is_constant()) q = q * lc.terms()[0].coeff.inverse();
  return MinimalPolynomial{q, base, ty};
}

DegreeSlice degree_slice(const Ideal& ideal, std::uint32_t b, const MonomialOrder& order) {
  if (!order.is_degree_compatible())
    fail(ErrorCode::kInvalidArgument, "degree slices require the grevlex order");
  const Ring& ring = ideal.ring();
  DegreeSlice out;
  out.degree = b;
  if (ideal.is_zero()) return out;
  const auto& gb = ideal.groebner_basis(order);
  auto monos = monomials_up_to(ring.nvars(), b);
  std::vector<Polynomial> nfs;
  std::map<std::vector<std::uint32_t>, std::size_t> row_of;
  std::vector<Monomial> rows;
  auto mkey = [&](const Monomial& m) {
    std::vector<std::uint32_t> k(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) k[i] = m[i];
    return k;
  };
  for (const auto& m : monos) {
    Polynomial nf = gb.is_unit() ? Polynomial(ring) : normal_form(Polynomial::term(ring, m, ring.field().one()), gb);
    for (const auto& t : nf.terms()) {
      auto k = mkey(t.mono);
      if (!row_of.count(k)) {
        row_of[k] = rows.size();
        rows.push_back(t.mono);
      }
    }
    nfs.push_back(std::move(nf));
  }
  Matrix a(rows.size(), monos.size(), ring.field().zero());
  for (std::size_t c = 0; c < monos.size(); ++c)
    for (const auto& t : nfs[c].terms()) a.at(row_of[mkey(t.mono)], c) = t.coeff;
  for (const auto& v : a.kernel()) {
    std::vector<Term> ts;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (!v[c].is_zero()) ts.push_back({monos[c], v[c]});
    out.basis.emplace_back(ring, std::move(ts));
  }
  return out;
}

std::optional<std::vector<Polynomial>> solve_linear_system_capped(
    const std::vector<std::vector<Polynomial>>& coeffs, const std::vector<Polynomial>& rhs, std::uint32_t cap) {
  if (coeffs.size() != rhs.size()) fail(ErrorCode::kDimensionMismatch, "coefficient rows differ from rhs length");
  if (coeffs.empty()) return std::vector<Polynomial>{};
  std::size_t n2 = coeffs[0].size();
  for (const auto& row : coeffs)
    if (row.size() != n2) fail(ErrorCode::kDimensionMismatch, "ragged coefficient matrix");
  const Ring& ring = rhs[0].ring();
  for (const auto& row : coeffs)
    for (const auto& p : row)
      if (p.ring() != ring) fail(ErrorCode::kMixedRings, "system polynomials live in different rings");
  auto unknowns = monomials_up_to(ring.nvars(), cap);
  std::size_t nu = unknowns.size();
  // Row index per (equation, monomial).
  std::vector<std::map<std::vector<std::uint32_t>, std::size_t>> row_of(coeffs.size());
  std::size_t nrows = 0;
  auto mkey = [](const Monomial& m) {
    std::vector<std::uint32_t> k(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) k[i] = m[i];
    return k;
  };
  auto row = [&](std::size_t i, const Monomial& m) {
    auto [it, inserted] = row_of[i].emplace(mkey(m), nrows);
    if (inserted) ++nrows;
    return it->second;
  };
  struct Entry {
    std::size_t r, c;
    Coeff v;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t u = 0; u < nu; ++u)
        for (const auto& t : coeffs[i][j].terms())
          entries.push_back({row(i, t.mono * unknowns[u]), j * nu + u, t.coeff});
  std::vector<std::pair<std::size_t, Coeff>> b_entries;
  for (std::size_t i = 0; i < rhs.size(); ++i)
    for (const auto& t : rhs[i].terms()) b_entries.emplace_back(row(i, t.mono), t.coeff);
  Matrix a(nrows, n2 * nu, ring.field().zero());
  for (auto& e : entries) a.at(e.r, e.c) += e.v;
  std::vector<Coeff> b(nrows, ring.field().zero());
  for (auto& [r, v] : b_entries) b[r] += v;
  auto x = solve_linear(a, b);
  if (!x) return std::nullopt;
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < n2; ++j) {
    std::vector<Term> ts;
    for (std::size_t u = 0; u < nu; ++u)
      if (!(*x)[j * nu + u].is_zero()) ts.push_back({unknowns[u], (*x)[j * nu + u]});
    out.emplace_back(ring, std::move(ts));
  }
  return out;
}

}  // namespace idealkit
