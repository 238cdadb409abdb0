#include <gtest/gtest.h>

#include "errors.hpp"
#include "support.hpp"
#include "univariate.hpp"

using namespace idealkit;
using namespace idealkit::testing;

namespace {

using Kind = Irreducibility::Kind;

// Reducible iff some monic polynomial of degree 1..deg/2 divides f.
bool brute_force_reducible(const Polynomial& f) {
  const Ring& r = f.ring();
  auto deg = static_cast<std::uint32_t>(f.total_degree());
  for (std::uint32_t k = 1; 2 * k <= deg; ++k) {
    std::vector<Monomial> lower;
    for (std::uint32_t e = 0; e < k; ++e) lower.push_back(Monomial::variable(1, 0, e));
    for (const auto& tail : all_polynomials(r, lower)) {
      auto g = tail + Polynomial::term(r, Monomial::variable(1, 0, k), r.field().one());
      if (exact_quotient(f, g)) return true;
    }
  }
  return false;
}

}  // namespace

TEST(Univariate, IrreducibilityExamples) {
  Ring f2 = make_ring("Fp:2", {"x"});
  EXPECT_EQ(is_irreducible(P(f2, "x^2 + x + 1")).kind, Kind::kIrreducible);
  auto red = is_irreducible(P(f2, "x^2 + 1"));
  ASSERT_EQ(red.kind, Kind::kFactor);
  EXPECT_EQ(red.factor->monic(), P(f2, "x + 1"));
  Ring q = make_ring("Q", {"Y"});
  EXPECT_EQ(is_irreducible(P(q, "Y^4 - 10*Y^2 + 1")).kind, Kind::kIrreducible);
  EXPECT_EQ(is_irreducible(P(q, "Y^2 - 2")).kind, Kind::kIrreducible);
  // (Y^2 + 1)(Y^2 + 9) has no rational root and is reducible over Q.
  auto r4 = is_irreducible(P(q, "Y^4 + 10*Y^2 + 9"));
  ASSERT_EQ(r4.kind, Kind::kFactor);
  EXPECT_TRUE(exact_quotient(P(q, "Y^4 + 10*Y^2 + 9"), *r4.factor));
  try {
    (void)is_irreducible(P(q, "3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConstantInput);
  }
}

TEST(Univariate, MultivariateFactors) {
  Ring r = make_ring("Q", {"x", "y"});
  auto res = is_irreducible(P(r, "x^2*y^2 - 1"));
  ASSERT_EQ(res.kind, Kind::kFactor);
  EXPECT_TRUE(exact_quotient(P(r, "x^2*y^2 - 1"), *res.factor));
  EXPECT_EQ(is_irreducible(P(r, "y - x^2")).kind, Kind::kIrreducible);
}

TEST(Univariate, GcdAndPatterns) {
  Ring q = make_ring("Q", {"x"});
  EXPECT_EQ(univariate_gcd(P(q, "x^2 - x"), P(q, "x^3 - x^2"), 0), P(q, "x^2 - x"));
  EXPECT_EQ(univariate_gcd(P(q, "x^2 - 1"), P(q, "x^2 + 2*x + 1"), 0), P(q, "x + 1"));
  Ring f2 = make_ring("Fp:2", {"x"});
  // x^5 + x + 1 = (x^2 + x + 1)(x^3 + x^2 + 1) over F2.
  auto pattern = distinct_degree_pattern(UPoly::from_polynomial(P(f2, "x^5 + x + 1"), 0));
  std::sort(pattern.begin(), pattern.end());
  EXPECT_EQ(pattern, (std::vector<long>{2, 3}));
}

TEST(Univariate, UPolyArithmetic) {
  Ring q = make_ring("Q", {"t"});
  auto a = UPoly::from_polynomial(P(q, "t^3 - 2*t + 5"), 0);
  auto b = UPoly::from_polynomial(P(q, "t^2 + 1"), 0);
  auto [quo, rem] = a.divmod(b);
  EXPECT_EQ((quo * b + rem).to_polynomial(q, 0), P(q, "t^3 - 2*t + 5"));
  EXPECT_LT(rem.degree(), b.degree());
  EXPECT_EQ(a.evaluate(q.field().from_integer(2)), q.field().from_integer(9));
  EXPECT_EQ(a.derivative().to_polynomial(q, 0), P(q, "3*t^2 - 2"));
}

class IrreducibleOverFp : public ::testing::TestWithParam<int> {};

TEST_P(IrreducibleOverFp, AgreesWithBruteForce) {
  std::string field = "Fp:" + std::to_string(GetParam());
  Ring r = make_ring(field, {"x"});
  Gen gen(0x1EE + static_cast<unsigned>(GetParam()));
  for (int i = 0; i < 150; ++i) {
    auto f = gen.poly(r, 5, 6);
    if (f.total_degree() < 1) continue;
    auto res = is_irreducible(f);
    bool reducible = brute_force_reducible(f.monic());
    ASSERT_NE(res.kind, Kind::kUnknown) << f.to_string();
    ASSERT_EQ(res.kind == Kind::kFactor, reducible) << f.to_string();
    if (res.factor) {
      ASSERT_GT(res.factor->total_degree(), 0);
      ASSERT_LT(res.factor->total_degree(), f.total_degree());
      ASSERT_TRUE(exact_quotient(f, *res.factor));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, IrreducibleOverFp, ::testing::Values(2, 3, 5));

TEST(Univariate, RationalFactorsAlwaysDivide) {
  Ring q = make_ring("Q", {"x"});
  Gen gen(0x1EF);
  for (int i = 0; i < 60; ++i) {
    auto a = gen.nonzero_poly(q, 3, 3), b = gen.nonzero_poly(q, 3, 3);
    if (a.total_degree() < 1 || b.total_degree() < 1) continue;
    auto res = is_irreducible(a * b);
    ASSERT_NE(res.kind, Kind::kIrreducible) << (a * b).to_string();
    if (res.factor) {
      ASSERT_TRUE(exact_quotient(a * b, *res.factor));
    }
  }
}
