#include <gtest/gtest.h>

#include "errors.hpp"
#include "ideals.hpp"
#include "linalg.hpp"
#include "support.hpp"

using namespace idealkit;
using namespace idealkit::testing;

namespace {

// q(u) with q's base variables mapped back to the ideal's ring.
Polynomial evaluate_minpoly(const MinimalPolynomial& mp, const Polynomial& u) {
  std::vector<Polynomial> images;
  for (auto b : mp.base) images.push_back(Polynomial::variable(u.ring(), b));
  images.push_back(u);
  return mp.poly.compose(images, u.ring());
}

}  // namespace

TEST(Ideals, EliminateExamples) {
  Ring r = make_ring("Q", {"x", "y", "z"});
  auto e = eliminate(I(r, {"x^2 - y", "x^3 - z"}), {1, 2});
  ASSERT_EQ(e.ring().vars(), (std::vector<std::string>{"y", "z"}));
  EXPECT_TRUE(ideals_equal(e, I(e.ring(), {"y^3 - z^2"})));

  Ring rx = make_ring("Q", {"x"});
  EXPECT_TRUE(eliminate(I(rx, {"x - 1"}), {}).is_zero());

  Ring rxy = make_ring("Q", {"x", "y"});
  auto unit = eliminate(I(rxy, {"x*y - 1", "x^2"}), {1});
  ASSERT_FALSE(unit.is_zero());
  EXPECT_TRUE(unit.groebner_basis().is_unit());
}

TEST(Ideals, IntersectExamples) {
  Ring r = make_ring("Q", {"x", "y"});
  EXPECT_TRUE(ideals_equal(intersect(I(r, {"x"}), I(r, {"y"})), I(r, {"x*y"})));
  EXPECT_TRUE(ideals_equal(intersect(I(r, {"x"}), I(r, {"x"})), I(r, {"x"})));
  EXPECT_TRUE(ideals_equal(intersect(I(r, {"x^2"}), I(r, {"x"})), I(r, {"x^2"})));
}

TEST(Ideals, QuotientExamples) {
  Ring r = make_ring("Q", {"x", "y"});
  EXPECT_TRUE(ideals_equal(quotient_by_poly(I(r, {"x^2"}), P(r, "x")), I(r, {"x"})));
  EXPECT_TRUE(ideals_equal(quotient_by_poly(I(r, {"x*y"}), P(r, "x")), I(r, {"y"})));
  auto tc = I(r, {"x^2 - y", "y^3 - x"});
  EXPECT_TRUE(ideals_equal(quotient_by_poly(tc, P(r, "1")), tc));
  try {
    (void)quotient_by_poly(tc, Polynomial(r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroPolynomial);
  }
}

TEST(Ideals, SaturationExamples) {
  Ring r = make_ring("Q", {"x", "y"});
  EXPECT_TRUE(ideals_equal(saturate_by_poly(I(r, {"x^2*y"}), P(r, "y")), I(r, {"x^2"})));
  EXPECT_TRUE(saturate_by_poly(I(r, {"x"}), P(r, "x")).groebner_basis().is_unit());
  auto i = I(r, {"x^2 - y^3"});
  EXPECT_TRUE(ideals_equal(saturate_by_poly(i, P(r, "1")), i));

  Ring rz = make_ring("Q", {"x", "z"});
  EXPECT_TRUE(ideals_equal(saturate_by_subring(I(rz, {"x*z - x"}), {0}), I(rz, {"z - 1"})));
  EXPECT_TRUE(ideals_equal(saturate_by_subring(I(rz, {"z^2"}), {0}), I(rz, {"z^2"})));
  EXPECT_TRUE(ideals_equal(saturate_by_subring(I(r, {"y - x^2"}), {0}), I(r, {"y - x^2"})));
  try {
    (void)saturate_by_subring(Ideal(r), {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroIdeal);
  }
}

TEST(Ideals, MinimalPolynomialExamples) {
  Ring rx = make_ring("Q", {"x"});
  auto m1 = minimal_poly_mod_ideal(I(rx, {"x^2 - 2"}), P(rx, "x"), {});
  ASSERT_TRUE(m1);
  EXPECT_EQ(m1->poly.to_string(), "Y^2 - 2");

  Ring r = make_ring("Q", {"x", "y"});
  auto m2 = minimal_poly_mod_ideal(I(r, {"x^2 - 2", "y^2 - 3"}), P(r, "x + y"), {});
  ASSERT_TRUE(m2);
  EXPECT_EQ(m2->poly.to_string(), "Y^4 - 10*Y^2 + 1");
  EXPECT_EQ(m2->y_degree(), 4u);

  EXPECT_FALSE(minimal_poly_mod_ideal(I(r, {"y - x^2"}), P(r, "x"), {}));

  // Over the base x the element y is algebraic of degree 1.
  auto m3 = minimal_poly_mod_ideal(I(r, {"y - x^2"}), P(r, "y"), {0});
  ASSERT_TRUE(m3);
  EXPECT_EQ(m3->y_degree(), 1u);
  EXPECT_TRUE(contains(I(r, {"y - x^2"}), evaluate_minpoly(*m3, P(r, "y"))));
}

TEST(Ideals, DegreeSliceExamples) {
  Ring rx = make_ring("Q", {"x"});
  EXPECT_EQ(degree_slice(I(rx, {"x^2"}), 3).dimension(), 2u);
  Ring r = make_ring("Q", {"x", "y"});
  EXPECT_EQ(degree_slice(I(r, {"x", "y"}), 1).dimension(), 2u);
  auto s = degree_slice(I(r, {"x^2 - y"}), 2);
  ASSERT_EQ(s.dimension(), 1u);
  EXPECT_EQ(s.basis[0].monic(), P(r, "x^2 - y"));
  EXPECT_THROW((void)degree_slice(I(r, {"x"}), 2, MonomialOrder::lex()), Error);
}

TEST(Ideals, LinearSystemExamples) {
  Ring r = make_ring("Q", {"x", "y"});
  auto s1 = solve_linear_system_capped({{P(r, "x")}}, {P(r, "x^2")}, 1);
  ASSERT_TRUE(s1);
  EXPECT_EQ((*s1)[0], P(r, "x"));
  for (std::uint32_t cap : {0u, 1u, 3u, 6u})
    EXPECT_FALSE(solve_linear_system_capped({{P(r, "x"), P(r, "y")}}, {P(r, "1")}, cap));
  auto s3 = solve_linear_system_capped({{P(r, "x"), P(r, "y")}}, {P(r, "x^2 + x*y")}, 1);
  ASSERT_TRUE(s3);
  EXPECT_EQ(P(r, "x") * (*s3)[0] + P(r, "y") * (*s3)[1], P(r, "x^2 + x*y"));
  try {
    (void)solve_linear_system_capped({{P(r, "x")}}, {P(r, "x"), P(r, "y")}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(IdealsProperties, DefinitionalQuotientAndSaturationOverF2) {
  Ring r = make_ring("Fp:2", {"x", "y"});
  Gen gen(0x51);
  auto candidates = all_polynomials(r, monomials_up_to(2, 3));
  for (int trial = 0; trial < 6; ++trial) {
    auto ideal = gen.ideal(r, 2, 2, 3);
    auto f = gen.nonzero_poly(r, 2, 3);
    auto quot = quotient_by_poly(ideal, f);
    auto sat = saturate_by_poly(ideal, f);
    for (const auto& g : candidates) {
      ASSERT_EQ(contains(quot, g), contains(ideal, f * g));
      bool witnessed = false;
      Polynomial fe = g;
      for (int e = 0; e <= 6 && !witnessed; ++e, fe = fe * f) witnessed = contains(ideal, fe);
      ASSERT_EQ(contains(sat, g), witnessed);
    }
  }
}

TEST(IdealsProperties, EliminationAndSaturationLaws) {
  Gen gen(0x52);
  int checked = 0;
  for (const char* field : {"Fp:2", "Fp:3", "Q"}) {
    Ring r = make_ring(field, {"x", "y", "z"});
    for (int trial = 0; trial < 12; ++trial) {
      auto ideal = gen.ideal(r, 2, 2, 3);
      if (!ideal.is_proper()) continue;
      ++checked;
      std::vector<std::size_t> keep{1, 2};
      auto e = eliminate(ideal, keep);
      for (const auto& g : e.generators()) {
        ASSERT_EQ(g.ring(), e.ring());
        ASSERT_TRUE(contains(ideal, g.compose({Polynomial::variable(r, 1), Polynomial::variable(r, 2)}, r)));
      }
      for (const auto& g : ideal.generators()) {
        if (g.degree_in(0) == 0) {
          ASSERT_TRUE(contains(e, restrict_ring(g, e.ring(), keep)));
        }
      }

      auto s = saturate_by_subring(ideal, {2});
      ASSERT_TRUE(ideal_contains(s, ideal));
      ASSERT_TRUE(ideals_equal(saturate_by_subring(s, {2}), s));
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(IdealsProperties, MinimalPolynomialIsMinimalAndAnnihilates) {
  Gen gen(0x53);
  Ring r = make_ring("Fp:3", {"x", "y"});
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 15; ++trial) {
    // Zero-dimensional: univariate generators in each variable plus noise.
    std::vector<Polynomial> gens{P(r, "x^2") + gen.poly(r, 1, 2), P(r, "y^2") + gen.poly(r, 1, 2)};
    Ideal ideal(r, gens);
    if (!ideal.is_proper()) continue;
    auto u = gen.nonzero_poly(r, 2, 3);
    auto mp = minimal_poly_mod_ideal(ideal, u, {});
    ASSERT_TRUE(mp);
    ASSERT_TRUE(contains(ideal, evaluate_minpoly(*mp, u)));
    // No smaller Y-degree: the powers 1, u, ..., u^(k-1) stay independent modulo I.
    const auto& gb = ideal.groebner_basis();
    std::vector<Polynomial> powers;
    Polynomial pw = Polynomial::constant(r, 1);
    for (std::uint32_t k = 0; k < mp->y_degree(); ++k, pw = pw * u) powers.push_back(normal_form(pw, gb));
    auto standard = monomials_up_to(2, 2);
    Matrix m(standard.size(), powers.size(), r.field().zero());
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (std::size_t row = 0; row < standard.size(); ++row) m.at(row, c) = powers[c].coefficient(standard[row]);
    ASSERT_EQ(m.rank(), powers.size());
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(IdealsProperties, LinearSystemSolutionsSatisfySystem) {
  Gen gen(0x54);
  for (const char* field : {"Fp:2", "Q"}) {
    Ring r = make_ring(field, {"x", "y"});
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t rows = static_cast<std::size_t>(gen.range(1, 2)), cols = static_cast<std::size_t>(gen.range(1, 3));
      std::vector<std::vector<Polynomial>> a(rows);
      for (auto& row : a)
        for (std::size_t j = 0; j < cols; ++j) row.push_back(gen.poly(r, 2, 3));
      std::vector<Polynomial> planted;
      for (std::size_t j = 0; j < cols; ++j) planted.push_back(gen.poly(r, 2, 3));
      std::vector<Polynomial> rhs;
      for (const auto& row : a) {
        Polynomial h(r);
        for (std::size_t j = 0; j < cols; ++j) h += row[j] * planted[j];
        rhs.push_back(h);
      }
      auto sol = solve_linear_system_capped(a, rhs, 2);
      ASSERT_TRUE(sol);
      for (std::size_t i = 0; i < rows; ++i) {
        Polynomial h(r);
        for (std::size_t j = 0; j < cols; ++j) {
          ASSERT_LE((*sol)[j].total_degree(), 2);
          h += a[i][j] * (*sol)[j];
        }
        ASSERT_EQ(h, rhs[i]);
      }
    }
  }
}

TEST(IdealsProperties, DegreeSliceCountsMatchEnumeration) {
  Ring r = make_ring("Fp:2", {"x", "y"});
  Gen gen(0x55);
  auto polys = all_polynomials(r, monomials_up_to(2, 2));
  for (int trial = 0; trial < 15; ++trial) {
    auto ideal = gen.ideal(r, 2, 2, 3);
    std::size_t members = 0;
    for (const auto& p : polys) members += contains(ideal, p);
    auto dim = degree_slice(ideal, 2).dimension();
    ASSERT_EQ(members, std::size_t{1} << dim);
  }
}
