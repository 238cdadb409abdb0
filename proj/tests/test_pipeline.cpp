#include <gtest/gtest.h>

#include "errors.hpp"
#include "pipeline.hpp"
#include "primality.hpp"
#include "support.hpp"

using namespace idealkit;
using namespace idealkit::testing;

namespace {

// p(U) for p in K[Y], computed in the localized ring.
Polynomial eval_at(const Polynomial& p, const Polynomial& u_local) {
  const Ring& ring = u_local.ring();
  Polynomial out(ring);
  for (const auto& t : p.terms()) out += Polynomial::constant(ring, t.coeff) * u_local.pow(t.mono[0]);
  return out;
}

std::map<std::size_t, MinimalW> all_w(const Ideal& ideal, const std::vector<std::size_t>& basis) {
  std::map<std::size_t, MinimalW> ws;
  for (std::size_t j = 0; j < ideal.ring().nvars(); ++j)
    if (std::find(basis.begin(), basis.end(), j) == basis.end()) ws.emplace(j, minimal_w(ideal, basis, j));
  return ws;
}

// Invariants every report must satisfy, checked independently of the pipeline's own certificates.
void check_report(const Ideal& ideal, const PipelineReport& rep) {
  if (rep.f) {
    ASSERT_TRUE(contains(ideal, *rep.f * *rep.g));
    ASSERT_FALSE(contains(ideal, *rep.f));
    ASSERT_FALSE(contains(ideal, *rep.g));
    ASSERT_EQ(rep.i_prime, Tri::kNo);
  }
  if (rep.i_prime == Tri::kNo) {
    ASSERT_TRUE(rep.f.has_value());
  }
  if (rep.i_prime == Tri::kYes) {
    ASSERT_EQ(rep.j_maximal, Tri::kYes);
    ASSERT_TRUE(rep.contraction_ok);
  }
  if (!rep.easy_case.empty()) return;
  // Maximal independence of the basis.
  ASSERT_TRUE(eliminate(ideal, rep.basis_vars).is_zero());
  for (std::size_t j = 0; j < ideal.ring().nvars(); ++j) {
    if (rep.w.count(j) == 0) continue;
    auto with_j = rep.basis_vars;
    with_j.push_back(j);
    ASSERT_FALSE(eliminate(ideal, with_j).is_zero());
    ASSERT_TRUE(contains(ideal, rep.w.at(j)));
  }
  std::size_t prod = 1;
  for (const auto& [j, dj] : rep.d) prod *= dj;
  ASSERT_LE(rep.quotient_dim, prod);
  if (!rep.u || rep.inseparable || rep.phi.empty()) return;
  Localization loc = localize(ideal, rep.basis_vars);
  ASSERT_EQ(loc.quotient_dim(), rep.quotient_dim);
  auto ul = loc.to_local(*rep.u);
  ASSERT_TRUE(normal_form(eval_at(*rep.h, ul), loc.gb).is_zero());
  for (const auto& [j, phi] : rep.phi) {
    auto pos = static_cast<std::size_t>(std::find(loc.others.begin(), loc.others.end(), j) - loc.others.begin());
    ASSERT_TRUE(normal_form(Polynomial::variable(loc.local, pos) - eval_at(phi, ul), loc.gb).is_zero());
  }
}

}  // namespace

TEST(Pipeline, TranscendenceBasis) {
  Ring r = make_ring("Q", {"x", "y"});
  EXPECT_EQ(transcendence_basis(I(r, {"y - x^2"})), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(transcendence_basis(I(r, {"x^2 - 2", "y^2 - 3"})).empty());
  EXPECT_EQ(transcendence_basis(Ideal(r)), (std::vector<std::size_t>{0, 1}));
  try {
    (void)transcendence_basis(I(r, {"x", "x - 1"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kImproperIdeal);
  }
}

TEST(Pipeline, MinimalW) {
  Ring r = make_ring("Q", {"x", "y"});
  auto a = minimal_w(I(r, {"y - x^2"}), {0}, 1);
  EXPECT_EQ(a.w.monic(), P(r, "y - x^2").monic());
  EXPECT_EQ(a.degree, 1u);
  EXPECT_EQ(a.irreducible, Tri::kYes);

  Ring rx = make_ring("Q", {"x"});
  auto b = minimal_w(I(rx, {"x^2 - 2"}), {}, 0);
  EXPECT_EQ(b.w.monic(), P(rx, "x^2 - 2"));
  EXPECT_EQ(b.degree, 2u);
  EXPECT_EQ(b.irreducible, Tri::kYes);

  auto ideal = I(r, {"x^2*y^2 - 1"});
  auto c = minimal_w(ideal, {0}, 1);
  EXPECT_EQ(c.degree, 2u);
  ASSERT_EQ(c.irreducible, Tri::kNo);
  EXPECT_TRUE(same_set({c.f->monic(), c.g->monic()}, Ps(r, {"x*y - 1", "x*y + 1"})));

  try {
    (void)minimal_w(I(r, {"y - x^2"}), {}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAlgebraic);
  }
}

TEST(Pipeline, ContractionCheck) {
  Ring r = make_ring("Q", {"x", "y"});
  EXPECT_TRUE(contraction_check(I(r, {"y - x^2"}), {0}).ok);
  auto bad = I(r, {"x*(y - 1)"});
  auto res = contraction_check(bad, {0});
  ASSERT_FALSE(res.ok);
  ASSERT_TRUE(res.f && res.g);
  EXPECT_EQ(res.f->degree_in(1), 0u);
  EXPECT_TRUE(contains(bad, *res.f * *res.g));
  EXPECT_FALSE(contains(bad, *res.g));
  EXPECT_TRUE(contraction_check(I(r, {"x^2 - 2", "y^2 - 3"}), {}).ok);
}

TEST(Pipeline, ReduceModW) {
  Ring r = make_ring("Q", {"x", "y"});
  auto ideal = I(r, {"y - x^2"});
  auto loc = localize(ideal, {0});
  auto red = reduce_mod_w(loc, loc.to_local(P(r, "y^2")), {{1, P(r, "y - x^2")}});
  EXPECT_EQ(red, loc.to_local(P(r, "x^4")));

  Ring rx = make_ring("Q", {"x"});
  auto l2 = localize(I(rx, {"x^2 - 2"}), {});
  EXPECT_EQ(reduce_mod_w(l2, l2.to_local(P(rx, "x^3")), {{0, P(rx, "x^2 - 2")}}), l2.to_local(P(rx, "2*x")));
  auto already = l2.to_local(P(rx, "x + 5"));
  EXPECT_EQ(reduce_mod_w(l2, already, {{0, P(rx, "x^2 - 2")}}), already);
}

TEST(Pipeline, CharacteristicPolynomial) {
  Ring rx = make_ring("Q", {"x"});
  auto l1 = localize(I(rx, {"x^2 - 2"}), {});
  auto t1 = char_poly_det_trick(l1, l1.to_local(P(rx, "x")), {{0, P(rx, "x^2 - 2")}});
  EXPECT_EQ(t1.to_string(), "Y^2 - 2");

  Ring r = make_ring("Q", {"x", "y"});
  auto ideal = I(r, {"x^2 - 2", "y^2 - 3"});
  auto l2 = localize(ideal, {});
  std::map<std::size_t, Polynomial> w{{0, P(r, "x^2 - 2")}, {1, P(r, "y^2 - 3")}};
  EXPECT_EQ(char_poly_det_trick(l2, l2.to_local(P(r, "x + y")), w).to_string(), "Y^4 - 10*Y^2 + 1");
  auto one = char_poly_det_trick(l2, l2.to_local(P(r, "1")), w);
  EXPECT_EQ(one, P(one.ring(), "(Y - 1)^4"));
}

TEST(Pipeline, PrimitiveElement) {
  Ring r = make_ring("Q", {"x", "y"});
  auto ideal = I(r, {"x^2 - 2", "y^2 - 3"});
  auto loc = localize(ideal, {});
  auto pe = find_primitive_element(ideal, loc, all_w(ideal, {}));
  ASSERT_EQ(pe.status, PrimitiveElement::Status::kFound);
  EXPECT_EQ(pe.u, P(r, "x + y"));
  EXPECT_EQ(pe.h.to_string(), "Y^4 - 10*Y^2 + 1");
  const Ring& yr = pe.h.ring();
  EXPECT_EQ(pe.phi.at(0), P(yr, "1/2*Y^3 - 9/2*Y"));
  EXPECT_EQ(pe.phi.at(1), P(yr, "-1/2*Y^3 + 11/2*Y"));

  Ring rx = make_ring("Q", {"x"});
  auto single = I(rx, {"x^3 - 5"});
  auto ls = localize(single, {});
  auto ps = find_primitive_element(single, ls, all_w(single, {}));
  EXPECT_EQ(ps.u, P(rx, "x"));
  EXPECT_EQ(ps.h.to_string(), "Y^3 - 5");
  EXPECT_EQ(ps.phi.at(0).to_string(), "Y");

  Ring f2 = make_ring("Fp:2", {"t", "x"});
  auto insep = I(f2, {"x^2 - t"});
  auto li = localize(insep, {0});
  auto pi = find_primitive_element(insep, li, all_w(insep, {0}));
  EXPECT_EQ(pi.status, PrimitiveElement::Status::kInseparable);
}

TEST(Pipeline, EndToEndExamples) {
  Ring r3 = make_ring("Q", {"x", "y", "z"});
  auto cubic = I(r3, {"y - x^2", "z - x^3"});
  auto a = run_pipeline(cubic);
  EXPECT_EQ(a.r, 1u);
  EXPECT_TRUE(a.contraction_ok);
  EXPECT_EQ(a.quotient_dim, 1u);
  EXPECT_EQ(a.j_maximal, Tri::kYes);
  EXPECT_EQ(a.i_prime, Tri::kYes);
  check_report(cubic, a);

  Ring r = make_ring("Q", {"x", "y"});
  auto sq = I(r, {"x^2 - 2", "y^2 - 3"});
  auto b = run_pipeline(sq);
  EXPECT_EQ(b.r, 0u);
  EXPECT_EQ(*b.u, P(r, "x + y"));
  EXPECT_EQ(b.h->to_string(), "Y^4 - 10*Y^2 + 1");
  EXPECT_EQ(b.quotient_dim, 4u);
  EXPECT_EQ(b.i_prime, Tri::kYes);
  check_report(sq, b);

  Ring rx = make_ring("Q", {"x"});
  auto c = run_pipeline(I(rx, {"x^2"}));
  EXPECT_EQ(c.i_prime, Tri::kNo);
  EXPECT_EQ(*c.f, P(rx, "x"));
  EXPECT_EQ(*c.g, P(rx, "x"));

  Ring f2 = make_ring("Fp:2", {"t", "x"});
  auto d = run_pipeline(I(f2, {"x^2 - t"}));
  EXPECT_TRUE(d.inseparable);
  EXPECT_EQ(d.basis_vars, (std::vector<std::size_t>{0}));
  EXPECT_EQ(d.i_prime, Tri::kUnknown);
  EXPECT_EQ(d.j_maximal, Tri::kUnknown);

  auto split = I(r, {"x^2 + 1", "y^2 + 1"});
  auto e = run_pipeline(split);
  EXPECT_EQ(e.j_maximal, Tri::kNo);
  EXPECT_EQ(e.i_prime, Tri::kNo);
  check_report(split, e);

  auto zero = run_pipeline(Ideal(r));
  EXPECT_EQ(zero.r, 2u);
  EXPECT_EQ(zero.i_prime, Tri::kYes);

  auto cusp = I(r3, {"x*z - y^2", "x^3 - y*z"});
  auto f = run_pipeline(cusp);
  EXPECT_FALSE(f.contraction_ok);
  EXPECT_EQ(f.i_prime, Tri::kNo);
  check_report(cusp, f);

  EXPECT_THROW((void)run_pipeline(I(r, {"x", "x + 1"})), Error);
}

TEST(PipelineProperties, AgreesWithOracleOnDecisiveFamilies) {
  Gen gen(0xC1);
  int decisive = 0;
  for (const char* field : {"Q", "Fp:3"}) {
    Ring r1 = make_ring(field, {"x"});
    Ring r2 = make_ring(field, {"x", "y"});
    for (int i = 0; i < 30; ++i) {
      const Ring& r = i % 2 ? r2 : r1;
      auto f = gen.nonzero_poly(r, 3, 3);
      if (f.is_constant()) continue;
      Ideal ideal(r, {f});
      auto rep = run_pipeline(ideal);
      check_report(ideal, rep);
      auto oracle = primality_oracle_small(ideal);
      if (oracle.status == OracleVerdict::Status::kUnknown || rep.i_prime == Tri::kUnknown) continue;
      ASSERT_EQ(rep.i_prime == Tri::kYes, oracle.status == OracleVerdict::Status::kPrime) << f.to_string();
      ++decisive;
    }
  }
  EXPECT_GE(decisive, 30);
}

TEST(PipelineProperties, ZeroDimensionalInvariants) {
  Gen gen(0xC2);
  Ring r = make_ring("Q", {"x", "y"});
  int found = 0;
  for (int i = 0; i < 25; ++i) {
    std::vector<Polynomial> gens{P(r, "x^2") + gen.poly(r, 1, 2), P(r, "y^2") + gen.poly(r, 1, 2)};
    Ideal ideal(r, gens);
    if (!ideal.is_proper()) continue;
    auto rep = run_pipeline(ideal);
    check_report(ideal, rep);
    found += rep.u.has_value();

    // Determinant trick on random elements and the reduction degree bound.
    auto loc = localize(ideal, rep.basis_vars);
    auto ws = rep.w;
    for (int k = 0; k < 3; ++k) {
      auto f = loc.to_local(gen.poly(r, 3, 4));
      auto theta = char_poly_det_trick(loc, f, ws);
      ASSERT_EQ(theta.degree_in(0), loc.quotient_dim());
      ASSERT_TRUE(theta.leading_coeff(MonomialOrder::grevlex()).is_one());
      ASSERT_TRUE(normal_form(eval_at(theta, f), loc.gb).is_zero());
      auto red = reduce_mod_w(loc, f, ws);
      ASSERT_TRUE(normal_form(red - f, loc.gb).is_zero());
      for (std::size_t v = 0; v < loc.others.size(); ++v) ASSERT_LT(red.degree_in(v), rep.d.at(loc.others[v]));
    }
  }
  EXPECT_GE(found, 15);
}

TEST(PipelineProperties, PositiveDimensionalInvariants) {
  Gen gen(0xC3);
  Ring r = make_ring("Q", {"x", "y", "z"});
  int checked = 0;
  for (int i = 0; i < 12; ++i) {
    // Graph of a random map x -> (y, z): prime of dimension one.
    auto p = gen.poly(r.subring({0}), 2, 2).compose({Polynomial::variable(r, 0)}, r);
    auto q = gen.poly(r.subring({0}), 2, 2).compose({Polynomial::variable(r, 0)}, r);
    Ideal ideal(r, {P(r, "y") - p, P(r, "z^2") - q});
    auto rep = run_pipeline(ideal);
    check_report(ideal, rep);
    ASSERT_EQ(rep.r, 1u);
    ++checked;
  }
  EXPECT_EQ(checked, 12);
}
