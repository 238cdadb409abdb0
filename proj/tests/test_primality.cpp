#include <gtest/gtest.h>

#include "errors.hpp"
#include "primality.hpp"
#include "support.hpp"
#include "univariate.hpp"

using namespace idealkit;
using namespace idealkit::testing;

namespace {

using PS = PrimalityVerdict::Status;
using MS = MaximalityVerdict::Status;
using OS = OracleVerdict::Status;
constexpr auto kExhaustive = EnumerationMode::kExhaustive;
constexpr auto kWitness = EnumerationMode::kWitnessSearch;

void expect_counterexample(const Ideal& ideal, const PrimalityVerdict& v, std::uint32_t b) {
  ASSERT_EQ(v.status, PS::kCounterexample);
  ASSERT_TRUE(v.f && v.g);
  EXPECT_TRUE(contains(ideal, *v.f * *v.g));
  EXPECT_FALSE(contains(ideal, *v.f));
  EXPECT_FALSE(contains(ideal, *v.g));
  EXPECT_LE(v.f->total_degree(), b);
  EXPECT_LE(v.g->total_degree(), b);
}

// Literal definition: every pair of degree <= b with f*g in I has a factor in I.
bool prime_up_to_brute_force(const Ideal& ideal, std::uint32_t b) {
  auto polys = all_polynomials(ideal.ring(), monomials_up_to(ideal.ring().nvars(), b));
  std::vector<Polynomial> outside;
  for (const auto& p : polys)
    if (!contains(ideal, p)) outside.push_back(p);
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i; j < outside.size(); ++j)
      if (contains(ideal, outside[i] * outside[j])) return false;
  return true;
}

// Affine linear system over F2 in n variables: maximal iff consistent with full rank.
bool linear_ideal_is_maximal(const std::vector<std::vector<int>>& rows, std::size_t n) {
  auto m = rows;  // each row: n coefficients then constant
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && !m[piv][c]) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k <= n; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  for (std::size_t r = rank; r < m.size(); ++r)
    if (m[r][n]) return false;  // 1 in the ideal
  return rank == n;
}

}  // namespace

TEST(Primality, PrimeUpToExamples) {
  Ring f2 = make_ring("Fp:2", {"x"});
  auto i1 = I(f2, {"x^2"});
  auto v1 = prime_up_to(i1, 1, kExhaustive);
  expect_counterexample(i1, v1, 1);
  EXPECT_EQ(*v1.f, P(f2, "x"));

  auto i2 = I(f2, {"x^2 + 1"});
  auto v2 = prime_up_to(i2, 2, kExhaustive);
  expect_counterexample(i2, v2, 2);
  EXPECT_EQ(*v2.f, P(f2, "x + 1"));
  EXPECT_EQ(*v2.g, P(f2, "x + 1"));

  auto v3 = prime_up_to(I(f2, {"x^2 + x + 1"}), 2, kExhaustive);
  EXPECT_EQ(v3.status, PS::kPrimeUpTo);
  EXPECT_EQ(v3.bound, 2u);
}

TEST(Primality, ExhaustiveRefusals) {
  Ring q = make_ring("Q", {"x"});
  try {
    (void)prime_up_to(I(q, {"x^2"}), 1, kExhaustive);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleEnumeration);
  }
  Ring f3 = make_ring("Fp:3", {"x", "y", "z"});
  EnumerationOptions tiny;
  tiny.cap = 100;
  EXPECT_THROW((void)prime_up_to(I(f3, {"x*y"}), 2, kExhaustive, tiny), Error);
  try {
    (void)prime_up_to(I(f3, {"x", "x + 1"}), 1, kExhaustive);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kImproperIdeal);
  }
}

TEST(Primality, WitnessSearchNeverClaimsPrimeFalsely) {
  Ring q = make_ring("Q", {"x", "y"});
  auto i = I(q, {"x*y"});
  auto v = prime_up_to(i, 1, kWitness);
  expect_counterexample(i, v, 1);
  auto w = prime_up_to(I(q, {"y - x^2"}), 2, kWitness);
  EXPECT_EQ(w.status, PS::kUndetermined);
}

TEST(Primality, MaximalUpToExamples) {
  Ring f2 = make_ring("Fp:2", {"x", "y"});
  EXPECT_EQ(maximal_up_to(I(f2, {"x", "y"}), 1, kExhaustive).status, MS::kMaximalUpTo);
  Ring fx = make_ring("Fp:2", {"x"});
  auto v = maximal_up_to(I(fx, {"x^2"}), 1, kExhaustive);
  ASSERT_EQ(v.status, MS::kNonInvertible);
  EXPECT_EQ(*v.f, P(fx, "x"));
  auto xy = I(f2, {"x*y"});
  auto w = maximal_up_to(xy, 1, kExhaustive);
  ASSERT_EQ(w.status, MS::kNonInvertible);
  EXPECT_FALSE(contains(xy, *w.f));
  EXPECT_FALSE(Ideal(f2, {xy.generators()[0], *w.f}).groebner_basis().is_unit());
}

TEST(Primality, IrreducibilityAndOracle) {
  Ring q = make_ring("Q", {"x"});
  EXPECT_EQ(primality_oracle_small(I(q, {"x^2 - 2"})).status, OS::kPrime);
  auto np = primality_oracle_small(I(q, {"x^2 - x", "x^3 - x^2"}));
  ASSERT_EQ(np.status, OS::kNotPrime);
  EXPECT_TRUE(same_set({np.f->monic(), np.g->monic()}, Ps(q, {"x", "x - 1"})));
  Ring r3 = make_ring("Q", {"x", "y", "z"});
  EXPECT_EQ(primality_oracle_small(I(r3, {"x + y - 1", "z - 2*x"})).status, OS::kPrime);
  EXPECT_EQ(primality_oracle_small(Ideal(r3)).status, OS::kPrime);
  EXPECT_EQ(primality_oracle_small(I(r3, {"x*y - z^2"})).status, OS::kPrime);
  EXPECT_EQ(primality_oracle_small(I(r3, {"x*y", "z^3 - x"})).status, OS::kUnknown);
}

TEST(Primality, NoetherExamples) {
  Ring r = make_ring("Q", {"x", "y"});
  auto s1 = noether_normalize_step(P(r, "x*y - 1"));
  EXPECT_EQ(s1.a, (std::vector<std::uint32_t>{1}));
  EXPECT_TRUE(s1.c.is_one());
  EXPECT_EQ(s1.transformed, P(r, "y^2 + x*y - 1"));
  auto s2 = noether_normalize_step(P(r, "x"));
  EXPECT_EQ(s2.a, (std::vector<std::uint32_t>{1}));
  EXPECT_EQ(s2.transformed, P(r, "x + y"));
  auto s3 = noether_normalize_step(P(r, "y^3 + x*y + x^2"));
  EXPECT_EQ(s3.a, (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(s3.transformed, P(r, "y^3 + x*y + x^2"));
  try {
    (void)noether_normalize_step(Polynomial(r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroPolynomial);
  }
}

TEST(PrimalityProperties, ExhaustiveAgreesWithBruteForce) {
  Gen gen(0xA1);
  for (int trial = 0; trial < 50; ++trial) {
    auto n = static_cast<std::size_t>(gen.range(1, 2));
    Ring r = make_ring("Fp:2", n == 1 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"});
    auto ideal = gen.ideal(r, 2, static_cast<std::uint32_t>(gen.range(1, 2)), 3);
    if (!ideal.is_proper()) continue;
    auto b = static_cast<std::uint32_t>(gen.range(1, 2));
    auto v = prime_up_to(ideal, b, kExhaustive);
    ASSERT_EQ(v.status == PS::kPrimeUpTo, prime_up_to_brute_force(ideal, b)) << trial;
    if (v.status == PS::kCounterexample) expect_counterexample(ideal, v, b);
  }
}

TEST(PrimalityProperties, UnivariateF3PrimeBoundInstance) {
  Ring r = make_ring("Fp:3", {"x"});
  std::size_t count = 0;
  for (std::uint32_t deg = 1; deg <= 4; ++deg) {
    std::vector<Monomial> lower;
    for (std::uint32_t e = 0; e < deg; ++e) lower.push_back(Monomial::variable(1, 0, e));
    for (const auto& tail : all_polynomials(r, lower)) {
      auto f = tail + Polynomial::term(r, Monomial::variable(1, 0, deg), r.field().one());
      Ideal ideal(r, {f});
      auto v = prime_up_to(ideal, deg, kExhaustive);
      auto oracle = primality_oracle_small(ideal);
      ASSERT_NE(oracle.status, OS::kUnknown);
      ASSERT_EQ(v.status == PS::kPrimeUpTo, oracle.status == OS::kPrime) << f.to_string();
      ++count;
    }
  }
  EXPECT_EQ(count, 120u);
}

TEST(PrimalityProperties, LinearMaximalityF2) {
  Ring r = make_ring("Fp:2", {"x", "y", "z"});
  std::vector<std::vector<int>> forms;
  for (int mask = 1; mask < 16; ++mask) forms.push_back({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1});
  auto to_poly = [&](const std::vector<int>& row) {
    Polynomial p(r);
    for (std::size_t v = 0; v < 3; ++v)
      if (row[v]) p += Polynomial::variable(r, v);
    if (row[3]) p += Polynomial::constant(r, 1);
    return p;
  };
  std::size_t ideals = 0;
  for (std::size_t a = 0; a <= forms.size(); ++a)
    for (std::size_t b = a; b <= forms.size(); ++b)
      for (std::size_t c = b; c <= forms.size(); ++c) {
        std::vector<std::vector<int>> rows;
        for (auto k : {a, b, c})
          if (k < forms.size()) rows.push_back(forms[k]);
        std::vector<Polynomial> gens;
        for (const auto& row : rows) gens.push_back(to_poly(row));
        Ideal ideal(r, gens);
        bool truth = linear_ideal_is_maximal(rows, 3);
        bool got;
        try {
          got = maximal_up_to(ideal, 1, kExhaustive).status == MS::kMaximalUpTo;
        } catch (const Error& e) {
          ASSERT_EQ(e.code(), ErrorCode::kImproperIdeal);
          got = false;
        }
        ASSERT_EQ(got, truth);
        ++ideals;
      }
  EXPECT_GT(ideals, 500u);
}

TEST(PrimalityProperties, NoetherMonicWithBoundedExponents) {
  Gen gen(0xA2);
  for (int i = 0; i < 100; ++i) {
    auto n = static_cast<std::size_t>(gen.range(2, 3));
    std::vector<std::string> vars{"x", "y", "z"};
    Ring r = make_ring("Q", {vars.begin(), vars.begin() + static_cast<long>(n)});
    auto f = gen.nonzero_poly(r, 3, 4);
    if (f.is_constant()) continue;
    auto step = noether_normalize_step(f);
    auto d = static_cast<std::uint32_t>(f.total_degree());
    std::uint32_t limit = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) limit *= d + 1;
    ASSERT_EQ(step.a.size(), n - 1);
    for (auto a : step.a) ASSERT_LE(a, limit);
    auto last = n - 1;
    auto top = step.transformed.degree_in(last);
    auto lead = step.transformed.coefficient_of(last, top);
    ASSERT_TRUE(lead.is_constant() && !lead.is_zero()) << f.to_string();
    ASSERT_TRUE(lead.constant_term().is_one());
    // The transformed polynomial is c * f composed with the substitution.
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v + 1 < n; ++v)
      images.push_back(Polynomial::variable(r, v) +
                       (step.a[v] ? Polynomial::variable(r, last).pow(step.a[v]) : Polynomial(r)));
    images.push_back(Polynomial::variable(r, last));
    ASSERT_EQ(step.transformed, f.compose(images, r) * step.c);
  }
}

TEST(PrimalityProperties, DeterministicAcrossThreads) {
  Ring r = make_ring("Fp:3", {"x", "y"});
  Gen gen(0xA3);
  for (int i = 0; i < 8; ++i) {
    auto ideal = gen.ideal(r, 2, 2, 3);
    if (!ideal.is_proper()) continue;
    EnumerationOptions one, four;
    four.threads = 4;
    auto a = prime_up_to(ideal, 2, kExhaustive, one);
    auto b = prime_up_to(ideal, 2, kExhaustive, four);
    ASSERT_EQ(a.status, b.status);
    ASSERT_EQ(a.f.has_value(), b.f.has_value());
    if (a.f) {
      ASSERT_EQ(*a.f, *b.f);
      ASSERT_EQ(*a.g, *b.g);
    }
  }
}

TEST(Primality, NoetherSingleVariableOnlyScales) {
  Ring r = make_ring("Q", {"x"});
  auto step = noether_normalize_step(P(r, "2*x^2 + 1"));
  EXPECT_TRUE(step.a.empty());
  EXPECT_EQ(step.transformed, P(r, "x^2 + 1/2"));
}
