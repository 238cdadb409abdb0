#include "pipeline.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"
#include "linalg.hpp"
#include "primality.hpp"

namespace idealkit {

namespace {

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& vs, std::size_t n) {
  std::vector<bool> in(n, false);
  for (auto v : vs) in[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Moves `params` of f's ring into the coefficients of K and `mains` to target variables 0, 1, ...
Polynomial to_param_form(const Polynomial& f, const std::vector<std::size_t>& params,
                         const std::vector<std::size_t>& mains, const Field& field, const Ring& target) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial lm(mains.size());
    for (std::size_t i = 0; i < mains.size(); ++i) lm.set(i, t.mono[mains[i]]);
    std::uint32_t used = lm.degree();
    if (params.empty()) {
      if (used != t.mono.degree()) fail(ErrorCode::kInvalidArgument, "polynomial uses an unmapped variable");
      ts.push_back({lm, t.coeff});
      continue;
    }
    const Ring& pr = field.parameter_ring();
    Monomial pm(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) pm.set(i, t.mono[params[i]]);
    if (used + pm.degree() != t.mono.degree()) fail(ErrorCode::kInvalidArgument, "polynomial uses an unmapped variable");
    Coeff c = Coeff::rational_function(Polynomial::term(pr, pm, t.coeff), Polynomial::constant(pr, field.base().one()));
    ts.push_back({lm, c});
  }
  return Polynomial(target, std::move(ts));
}

std::vector<std::string> names_of(const Ring& ring, const std::vector<std::size_t>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(ring.var_name(v));
  return out;
}

// Monomials outside the leading-monomial ideal; nullopt when infinitely many.
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb, std::size_t nvars) {
  std::vector<Monomial> lms;
  for (const auto& g : gb.elements) lms.push_back(g.leading_monomial(gb.order));
  std::vector<std::uint32_t> cap(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    for (const auto& m : lms)
      if (m.degree() == m[v] && m[v] > 0 && (cap[v] == 0 || m[v] < cap[v])) cap[v] = m[v];
    if (cap[v] == 0) return std::nullopt;
  }
  auto divisible = [&](const Monomial& m) {
    for (const auto& l : lms)
      if (l.divides(m)) return true;
    return false;
  };
  std::vector<Monomial> out;
  Monomial m(nvars);
  // Odometer over the box bounded by the pure powers.
  while (true) {
    if (!divisible(m)) out.push_back(m);
    std::size_t v = 0;
    while (v < nvars) {
      if (m[v] + 1 < cap[v]) {
        m.set(v, m[v] + 1);
        break;
      }
      m.set(v, 0);
      ++v;
    }
    if (v == nvars) break;
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
  return out;
}

bool verified_pair(const Ideal& ideal, const Polynomial& f, const Polynomial& g) {
  return !contains(ideal, f) && !contains(ideal, g) && contains(ideal, f * g);
}

Polynomial horner(const Polynomial& y_poly, const Polynomial& x, const std::function<Polynomial(Polynomial)>& reduce) {
  const Ring& ring = x.ring();
  Polynomial acc(ring);
  for (long e = static_cast<long>(y_poly.degree_in(0)); e >= 0; --e) {
    acc = reduce(acc * x);
    Polynomial c = y_poly.coefficient_of(0, static_cast<std::uint32_t>(e));
    if (!c.is_zero()) acc += Polynomial::constant(ring, c.terms()[0].coeff);
  }
  return reduce(acc);
}

}  // namespace

const char* to_string(Tri t) {
  switch (t) {
    case Tri::kYes:
      return "Yes";
    case Tri::kNo:
      return "No";
    case Tri::kUnknown:
      return "Unknown";
  }
  return "?";
}

std::vector<std::size_t> transcendence_basis(const Ideal& ideal) {
  if (!ideal.is_proper()) fail(ErrorCode::kImproperIdeal, "ideal contains 1");
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < ideal.ring().nvars(); ++i) {
    auto cand = basis;
    cand.push_back(i);
    if (eliminate(ideal, cand).is_zero()) basis.push_back(i);
  }
  return basis;
}

MinimalW minimal_w(const Ideal& ideal, const std::vector<std::size_t>& basis0, std::size_t j) {
  auto basis = sorted_unique(basis0);
  if (std::find(basis.begin(), basis.end(), j) != basis.end())
    fail(ErrorCode::kInvalidArgument, "variable belongs to the basis");
  const Ring& ring = ideal.ring();
  auto mp = minimal_poly_mod_ideal(ideal, Polynomial::variable(ring, j), basis);
  if (!mp) fail(ErrorCode::kNotAlgebraic, ring.var_name(j) + " is not algebraic over the basis");
  std::vector<std::optional<std::size_t>> map(basis.size() + 1);
  for (std::size_t i = 0; i < basis.size(); ++i) map[i] = basis[i];
  map[basis.size()] = j;
  MinimalW out;
  out.w = mp->poly.remap(ring, map);
  out.degree = out.w.degree_in(j);
  check_invariant(contains(ideal, out.w), "w_j lies in the ideal");
  if (out.degree == 1) {
    out.irreducible = Tri::kYes;
    out.reason = "degree 1";
    return out;
  }
  auto irr = is_irreducible(out.w);
  out.reason = irr.reason;
  if (irr.kind == Irreducibility::Kind::kIrreducible) {
    out.irreducible = Tri::kYes;
  } else if (irr.kind == Irreducibility::Kind::kFactor) {
    Polynomial f = *irr.factor;
    Polynomial g = *exact_quotient(out.w, f);
    if (f.degree_in(j) == 0 || g.degree_in(j) == 0) {
      out.reason = "only a factor free of " + ring.var_name(j) + " was found";
    } else if (verified_pair(ideal, f, g)) {
      out.irreducible = Tri::kNo;
      out.f = f.monic();
      out.g = g.monic();
    } else {
      out.reason = "factor pair of w did not verify as a zero-divisor pair";
    }
  }
  return out;
}

ContractionResult contraction_check(const Ideal& ideal, const std::vector<std::size_t>& basis0) {
  auto basis = sorted_unique(basis0);
  ContractionResult out;
  if (basis.empty() || ideal.is_zero()) return out;
  Ideal sat = saturate_by_subring(ideal, basis);
  const Polynomial* witness = nullptr;
  for (const auto& s : sat.groebner_basis().elements)
    if (!contains(ideal, s) && (!witness || s.total_degree() < witness->total_degree())) witness = &s;
  if (!witness) return out;
  out.ok = false;
  Polynomial g = *witness;
  Ideal colon = quotient_by_poly(ideal, g);
  Ideal in_base = eliminate(colon, basis);
  check_invariant(!in_base.is_zero(), "saturation witness has a multiplier in the basis subring");
  const Polynomial* best = nullptr;
  for (const auto& e : in_base.groebner_basis().elements)
    if (!best || e.total_degree() < best->total_degree()) best = &e;
  std::vector<std::optional<std::size_t>> map(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) map[i] = basis[i];
  Polynomial f = best->remap(ideal.ring(), map);
  check_invariant(verified_pair(ideal, f, g), "contraction witness verifies");
  out.f = f;
  out.g = g;
  return out;
}

Polynomial Localization::to_local(const Polynomial& f) const {
  if (f.ring() == local) return f;
  return to_param_form(f, basis, others, field, local);
}

std::vector<Coeff> Localization::coordinates(const Polynomial& f_local) const {
  check_invariant(finite, "coordinates need a finite quotient");
  Polynomial nf = normal_form(f_local, gb);
  std::vector<Coeff> out(standard.size(), field.zero());
  for (const auto& t : nf.terms()) {
    auto it = std::lower_bound(standard.begin(), standard.end(), t.mono,
                               [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
    check_invariant(it != standard.end() && *it == t.mono, "normal form is supported on standard monomials");
    out[static_cast<std::size_t>(it - standard.begin())] = t.coeff;
  }
  return out;
}

Ring Localization::y_ring() const { return Ring(field, {local.fresh_name("Y")}); }

Localization localize(const Ideal& ideal, const std::vector<std::size_t>& basis0) {
  Localization loc;
  loc.source = ideal.ring();
  loc.basis = sorted_unique(basis0);
  loc.others = complement_of(loc.basis, loc.source.nvars());
  if (loc.basis.empty()) {
    loc.field = loc.source.field();
    loc.local = loc.source;
    loc.gb = ideal.groebner_basis();
  } else {
    if (loc.source.field().is_rational_function())
      fail(ErrorCode::kInvalidArgument, "localization over a rational function field");
    loc.field = Field::rational_functions(loc.source.field(), names_of(loc.source, loc.basis));
    loc.local = Ring(loc.field, names_of(loc.source, loc.others));
    MonomialOrder::Block top{loc.others, MonomialOrder::Kind::kGrevlex};
    MonomialOrder::Block low{loc.basis, MonomialOrder::Kind::kGrevlex};
    std::vector<Polynomial> gens;
    if (!ideal.is_zero()) {
      const auto& block_gb = ideal.groebner_basis(MonomialOrder::block({top, low}));
      for (const auto& g : block_gb.elements) gens.push_back(loc.to_local(g));
    }
    loc.gb = Ideal(loc.local, gens).groebner_basis();
  }
  if (loc.gb.is_unit()) fail(ErrorCode::kInvalidArgument, "basis variables are algebraically dependent modulo the ideal");
  auto std_monos = standard_monomials(loc.gb, loc.local.nvars());
  loc.finite = std_monos.has_value();
  if (std_monos) loc.standard = std::move(*std_monos);
  return loc;
}

Polynomial reduce_mod_w(const Localization& loc, const Polynomial& f_local, const std::map<std::size_t, Polynomial>& w) {
  Polynomial f = f_local;
  for (const auto& [j, wj] : w) {
    auto it = std::find(loc.others.begin(), loc.others.end(), j);
    if (it == loc.others.end()) fail(ErrorCode::kInvalidArgument, "w keyed by a basis variable");
    std::size_t li = static_cast<std::size_t>(it - loc.others.begin());
    Polynomial wl = loc.to_local(wj);
    std::uint32_t deg = wl.degree_in(li);
    if (deg == 0 || wl.degree_in(li) != static_cast<std::uint32_t>(wl.total_degree()) ||
        !wl.coefficient_of(li, deg).is_constant())
      fail(ErrorCode::kNonMonicModulus, "w is not univariate with invertible leading coefficient");
    f = divide(f, {wl}, MonomialOrder::grevlex()).remainder;
  }
  return f;
}

Polynomial char_poly_det_trick(const Localization& loc, const Polynomial& f_local,
                               const std::map<std::size_t, Polynomial>& w) {
  if (!loc.finite) fail(ErrorCode::kInvalidArgument, "quotient is not finite-dimensional");
  std::size_t t = loc.standard.size();
  const Coeff zero = loc.field.zero(), one = loc.field.one();
  std::vector<std::vector<UPoly>> m(t, std::vector<UPoly>(t, UPoly(zero)));
  for (std::size_t l = 0; l < t; ++l) {
    Polynomial prod = f_local.mul_term(loc.standard[l], one);
    auto col = loc.coordinates(reduce_mod_w(loc, prod, w));
    for (std::size_t i = 0; i < t; ++i) {
      UPoly entry({-col[i]}, zero);
      if (i == l) entry = entry + UPoly::monomial(one, 1, zero);
      m[i][l] = entry;
    }
  }
  // Leading principal minors of Y*1 - A are monic, so no pivoting is needed.
  UPoly prev({one}, zero);
  for (std::size_t k = 0; k + 1 < t; ++k) {
    check_invariant(!m[k][k].is_zero(), "Bareiss pivot is nonzero");
    for (std::size_t i = k + 1; i < t; ++i)
      for (std::size_t j = k + 1; j < t; ++j) {
        auto [q, rem] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divmod(prev);
        check_invariant(rem.is_zero(), "Bareiss division is exact");
        m[i][j] = q;
      }
    prev = m[k][k];
  }
  UPoly det = t == 0 ? UPoly({one}, zero) : m[t - 1][t - 1];
  check_invariant(det.degree() == static_cast<long>(t) && det.lc().is_one(), "characteristic polynomial is monic");
  Polynomial theta = det.to_polynomial(loc.y_ring(), 0);
  auto nf = [&](const Polynomial& p) { return normal_form(p, loc.gb); };
  check_invariant(horner(theta, f_local, nf).is_zero(), "characteristic polynomial annihilates f");
  return theta;
}

namespace {

// The k-th scalar of the candidate sequence, or nullopt past its end.
std::optional<Polynomial> scalar_candidate(const Ring& ring, const std::vector<std::size_t>& basis, std::uint64_t k) {
  const Field& field = ring.field();
  std::uint64_t nconst = field.is_prime() ? field.modulus() : k + 1;
  if (k < nconst) return Polynomial::constant(ring, field.from_mpz(mpz_class(static_cast<unsigned long>(k))));
  if (basis.empty()) return std::nullopt;
  k -= nconst;
  std::uint32_t e = static_cast<std::uint32_t>(k / basis.size()) + 1;
  return Polynomial::variable(ring, basis[k % basis.size()]).pow(e);
}

}  // namespace

PrimitiveElement find_primitive_element(const Ideal& ideal, const Localization& loc,
                                        const std::map<std::size_t, MinimalW>& w) {
  if (!loc.finite) fail(ErrorCode::kInvalidArgument, "quotient is not finite-dimensional");
  const Ring& ring = ideal.ring();
  Ring yr = loc.y_ring();
  PrimitiveElement out;
  std::uint32_t p = ring.field().characteristic();
  auto to_y = [&](const MinimalPolynomial& mp) {
    std::vector<std::size_t> params(mp.base.size());
    for (std::size_t i = 0; i < params.size(); ++i) params[i] = i;
    return to_param_form(mp.poly, params, {mp.y_var}, loc.field, yr).monic();
  };
  if (p != 0)
    for (const auto& [j, mw] : w)
      if (mw.w.derivative(j).is_zero()) {
        out.status = PrimitiveElement::Status::kInseparable;
        out.reason = "w_" + ring.var_name(j) + " has zero derivative in characteristic " + std::to_string(p);
        out.u = Polynomial::variable(ring, j);
        out.h = to_y(*minimal_poly_mod_ideal(ideal, out.u, loc.basis));
        return out;
      }
  std::optional<MinimalPolynomial> mp;
  Polynomial u(ring);
  for (std::size_t i = 0; i < loc.others.size(); ++i) {
    std::size_t j = loc.others[i];
    Polynomial xj = Polynomial::variable(ring, j);
    std::size_t target;
    if (i + 1 == loc.others.size()) {
      target = loc.quotient_dim();
    } else {
      std::vector<std::size_t> keep = loc.basis;
      keep.insert(keep.end(), loc.others.begin(), loc.others.begin() + static_cast<long>(i) + 1);
      std::sort(keep.begin(), keep.end());
      std::vector<std::size_t> sub_basis;
      for (std::size_t q = 0; q < keep.size(); ++q)
        if (std::binary_search(loc.basis.begin(), loc.basis.end(), keep[q])) sub_basis.push_back(q);
      target = localize(eliminate(ideal, keep), sub_basis).quotient_dim();
    }
    if (i == 0) {
      u = xj;
      mp = minimal_poly_mod_ideal(ideal, u, loc.basis);
      ++out.candidates;
      out.scalars.push_back("1");
      check_invariant(mp && mp->y_degree() == target, "first variable generates its subextension");
    } else {
      auto dj = w.count(j) ? w.at(j).degree : 1u;
      std::uint64_t budget = (std::uint64_t{mp->y_degree()} * (dj - 1) + 1) * 4;
      bool accepted = false;
      for (std::uint64_t k = 0; k < budget && !accepted; ++k) {
        auto c = scalar_candidate(ring, loc.basis, k);
        if (!c) break;
        Polynomial cand = u + *c * xj;
        auto cmp = minimal_poly_mod_ideal(ideal, cand, loc.basis);
        ++out.candidates;
        if (cmp && cmp->y_degree() == target) {
          u = cand;
          mp = cmp;
          out.scalars.push_back(c->to_string());
          accepted = true;
        }
      }
      if (!accepted)
        fail(ErrorCode::kCandidateExhaustion, "no primitive scalar found for " + ring.var_name(j));
    }
    if (p != 0 && to_y(*mp).derivative(0).is_zero()) {
      out.status = PrimitiveElement::Status::kInseparable;
      out.reason = "minimal polynomial of U has zero derivative in characteristic " + std::to_string(p);
      out.u = u;
      out.h = to_y(*mp);
      out.h_int = mp->poly;
      return out;
    }
  }
  out.u = u;
  out.h = to_y(*mp);
  out.h_int = mp->poly;
  // Solve x_j = sum c_m U^m on the standard-monomial coordinates.
  std::size_t deg = out.h.degree_in(0);
  std::size_t t = loc.quotient_dim();
  Polynomial ul = loc.to_local(u);
  std::vector<std::vector<Coeff>> powers;
  Polynomial cur = Polynomial::constant(loc.local, loc.field.one());
  for (std::size_t e = 0; e < deg; ++e) {
    powers.push_back(loc.coordinates(cur));
    cur = normal_form(cur * ul, loc.gb);
  }
  Matrix a(t, deg, loc.field.zero());
  for (std::size_t e = 0; e < deg; ++e)
    for (std::size_t r = 0; r < t; ++r) a.at(r, e) = powers[e][r];
  auto nf = [&](const Polynomial& q) { return normal_form(q, loc.gb); };
  for (std::size_t i = 0; i < loc.others.size(); ++i) {
    auto sol = solve_linear(a, loc.coordinates(Polynomial::variable(loc.local, i)));
    check_invariant(sol.has_value(), "each variable is a polynomial in the primitive element");
    std::vector<Term> ts;
    for (std::size_t e = 0; e < deg; ++e)
      if (!(*sol)[e].is_zero()) ts.push_back({Monomial::variable(1, 0, static_cast<std::uint32_t>(e)), (*sol)[e]});
    Polynomial phi(yr, std::move(ts));
    check_invariant(nf(Polynomial::variable(loc.local, i) - horner(phi, ul, nf)).is_zero(),
                    "x_j - phi_j(U) lies in the extension");
    out.phi.emplace(loc.others[i], std::move(phi));
  }
  return out;
}

PipelineReport run_pipeline(const Ideal& ideal) {
  if (!ideal.is_proper()) fail(ErrorCode::kImproperIdeal, "ideal contains 1");
  const Ring& ring = ideal.ring();
  std::size_t n = ring.nvars();
  PipelineReport rep;
  auto set_witness = [&](const Polynomial& f, const Polynomial& g, const std::string& source) {
    if (rep.f) return;
    check_invariant(verified_pair(ideal, f, g), "zero-divisor witness verifies");
    rep.f = f;
    rep.g = g;
    rep.certificates.push_back("f*g in I, f not in I, g not in I (" + source + "): ok");
  };

  if (ideal.is_zero()) {
    rep.easy_case = "zero ideal";
    rep.r = n;
    for (std::size_t i = 0; i < n; ++i) rep.basis_vars.push_back(i);
    rep.quotient_dim = 1;
    rep.j_maximal = Tri::kYes;
    rep.i_prime = Tri::kYes;
    return rep;
  }
  if (n == 1) {
    auto o = primality_oracle_small(ideal);
    rep.easy_case = "one variable";
    rep.notes.push_back(o.reason);
    const auto& gen = ideal.groebner_basis().elements[0];
    rep.w.emplace(0, gen);
    rep.d.emplace(0, gen.degree_in(0));
    rep.quotient_dim = gen.degree_in(0);
    if (o.status == OracleVerdict::Status::kPrime) {
      rep.j_maximal = Tri::kYes;
      rep.i_prime = Tri::kYes;
    } else if (o.status == OracleVerdict::Status::kNotPrime && o.f && o.g) {
      rep.j_maximal = Tri::kNo;
      rep.i_prime = Tri::kNo;
      set_witness(*o.f, *o.g, "generator factorization");
    }
    return rep;
  }

  rep.basis_vars = transcendence_basis(ideal);
  rep.r = rep.basis_vars.size();
  rep.certificates.push_back("I meets k[basis] only in 0 and each further variable is algebraic: ok");
  std::map<std::size_t, MinimalW> ws;
  for (std::size_t j : complement_of(rep.basis_vars, n)) {
    auto mw = minimal_w(ideal, rep.basis_vars, j);
    rep.w.emplace(j, mw.w);
    rep.d.emplace(j, mw.degree);
    rep.w_irreducible.emplace(j, mw.irreducible);
    rep.certificates.push_back("w_" + ring.var_name(j) + " in I: ok");
    if (mw.irreducible == Tri::kNo) set_witness(*mw.f, *mw.g, "factorization of w_" + ring.var_name(j));
    if (mw.irreducible == Tri::kUnknown) rep.notes.push_back("w_" + ring.var_name(j) + ": " + mw.reason);
    ws.emplace(j, std::move(mw));
  }

  auto con = contraction_check(ideal, rep.basis_vars);
  rep.contraction_ok = con.ok;
  if (con.ok)
    rep.certificates.push_back("saturation by k[basis] \\ {0} equals I: ok");
  else
    set_witness(*con.f, *con.g, "saturation by the basis subring");

  Localization loc = localize(ideal, rep.basis_vars);
  check_invariant(loc.finite, "extension is zero-dimensional over the basis field");
  rep.quotient_dim = loc.quotient_dim();
  mpz_class prod = 1;
  for (const auto& [j, dj] : rep.d) prod *= dj;
  check_invariant(mpz_class(static_cast<unsigned long>(rep.quotient_dim)) <= prod, "quotient_dim <= product of d_j");

  std::map<std::size_t, Polynomial> wmap = rep.w;
  std::optional<PrimitiveElement> pe;
  try {
    pe = find_primitive_element(ideal, loc, ws);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCandidateExhaustion) throw;
    rep.notes.push_back(e.what());
  }
  if (pe) {
    rep.u = pe->u;
    rep.h = pe->h;
    if (pe->status == PrimitiveElement::Status::kInseparable) {
      rep.inseparable = true;
      rep.notes.push_back("Inseparable: " + pe->reason);
    } else {
      rep.phi = pe->phi;
      // h(U) in I through its denominator-free multiple.
      std::vector<Polynomial> images;
      for (auto b : rep.basis_vars) images.push_back(Polynomial::variable(ring, b));
      images.push_back(pe->u);
      check_invariant(contains(ideal, pe->h_int.compose(images, ring)), "h(U) lies in I");
      rep.certificates.push_back("h(U) in I: ok");
      for (const auto& [j, phi] : pe->phi)
        rep.certificates.push_back(ring.var_name(j) + " - phi_" + ring.var_name(j) + "(U) in J: ok");
      Polynomial theta = char_poly_det_trick(loc, loc.to_local(pe->u), wmap);
      rep.certificates.push_back("det(Y - A_U)(U) in J with degree " + std::to_string(theta.degree_in(0)) + ": ok");

      std::size_t deg = pe->h.degree_in(0);
      if (deg == rep.quotient_dim) {
        Irreducibility irr;
        if (deg == 1) {
          irr.kind = Irreducibility::Kind::kIrreducible;
        } else {
          irr = is_irreducible(pe->h_int);
        }
        std::size_t yv = rep.r;
        if (irr.kind == Irreducibility::Kind::kIrreducible) {
          rep.j_maximal = Tri::kYes;
          rep.certificates.push_back("h irreducible with degree quotient_dim: ok");
        } else if (irr.kind == Irreducibility::Kind::kFactor) {
          Polynomial a = *irr.factor;
          Polynomial b = *exact_quotient(pe->h_int, a);
          if (a.degree_in(yv) > 0 && b.degree_in(yv) > 0) {
            rep.j_maximal = Tri::kNo;
            Polynomial fa = a.compose(images, ring), fb = b.compose(images, ring);
            if (verified_pair(ideal, fa, fb))
              set_witness(fa, fb, "factorization of h evaluated at U");
            else
              rep.notes.push_back("factor pair of h did not verify in I");
          } else {
            rep.notes.push_back("h: only a content factor was found");
          }
        } else {
          rep.notes.push_back("h: " + irr.reason);
        }
      } else {
        rep.notes.push_back("deg h differs from quotient_dim");
      }
    }
  }
  if (rep.f) {
    check_invariant(rep.j_maximal != Tri::kYes || !rep.contraction_ok, "maximal J with contraction has no zero divisors");
    rep.i_prime = Tri::kNo;
  } else if (rep.j_maximal == Tri::kYes && rep.contraction_ok) {
    rep.i_prime = Tri::kYes;
  }
  return rep;
}

}  // namespace idealkit
