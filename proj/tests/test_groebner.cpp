#include <gtest/gtest.h>

#include <algorithm>

#include "errors.hpp"
#include "groebner.hpp"
#include "support.hpp"

using namespace idealkit;
using namespace idealkit::testing;

TEST(Groebner, AlreadyABasis) {
  Ring r = make_ring("Q", {"x", "y"});
  auto gb = buchberger(I(r, {"x^2", "x*y"}), MonomialOrder::lex());
  EXPECT_TRUE(same_set(gb.elements, Ps(r, {"x^2", "x*y"})));
  EXPECT_TRUE(gb.reduced);
}

TEST(Groebner, TwistedCubic) {
  Ring r = make_ring("Q", {"x", "y", "z"});
  auto ideal = I(r, {"x^2 - y", "x^3 - z"});
  EXPECT_TRUE(same_set(ideal.groebner_basis(MonomialOrder::lex()).elements,
                       Ps(r, {"x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"})));
  EXPECT_TRUE(same_set(ideal.groebner_basis().elements, Ps(r, {"x^2 - y", "x*y - z", "y^2 - x*z"})));
  EXPECT_EQ(normal_form(P(r, "y^3"), ideal.groebner_basis(MonomialOrder::lex())), P(r, "z^2"));
  EXPECT_TRUE(contains(ideal, P(r, "y^3 - z^2")));
}

TEST(Groebner, ZeroAndUnitIdeals) {
  Ring r = make_ring("Q", {"x", "y"});
  EXPECT_TRUE(Ideal(r).groebner_basis().is_zero());
  EXPECT_TRUE(Ideal(r, {Polynomial(r)}).is_zero());
  auto unit = I(r, {"x*y - 1", "x^2"});
  EXPECT_TRUE(unit.groebner_basis().is_unit());
  EXPECT_FALSE(unit.is_proper());
}

TEST(Groebner, NormalFormsAndMembership) {
  Ring r = make_ring("Q", {"x", "y"});
  auto sq = I(r, {"x^2"});
  EXPECT_TRUE(normal_form(P(r, "x^3"), sq.groebner_basis()).is_zero());
  EXPECT_EQ(normal_form(P(r, "x^3 + x"), sq.groebner_basis()), P(r, "x"));
  EXPECT_TRUE(contains(I(r, {"x"}), P(r, "x*y")));
  EXPECT_FALSE(contains(I(r, {"x^2 + 1"}), P(r, "x + 1")));
}

TEST(Groebner, ResourceLimitIsReported) {
  Ring r = make_ring("Q", {"x", "y", "z"});
  Limits tight;
  tight.max_pairs = 1;
  try {
    (void)buchberger(I(r, {"x^2 - y", "x^3 - z", "y*z - x"}), MonomialOrder::lex(), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceLimit);
  }
  Limits shallow;
  shallow.max_degree = 2;
  EXPECT_THROW((void)buchberger(I(r, {"x^2 - y", "x^3 - z"}), MonomialOrder::lex(), shallow), Error);
}

TEST(Groebner, IdealEquality) {
  Ring r = make_ring("Q", {"x", "y"});
  EXPECT_TRUE(ideals_equal(I(r, {"x", "y"}), I(r, {"x + y", "x - y"})));
  EXPECT_FALSE(ideals_equal(I(r, {"x"}), I(r, {"x", "y"})));
  EXPECT_TRUE(ideal_contains(I(r, {"x", "y"}), I(r, {"x*y", "y^2"})));
}

namespace {

struct Case {
  std::string field;
  std::size_t nvars;
};

std::vector<MonomialOrder> all_orders(std::size_t n) {
  std::vector<MonomialOrder> out{MonomialOrder::lex(), MonomialOrder::grevlex()};
  if (n >= 2) out.push_back(MonomialOrder::elimination(n, {0}));
  return out;
}

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> all{"x", "y", "z"};
  return {all.begin(), all.begin() + static_cast<long>(n)};
}

}  // namespace

class GroebnerProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(GroebnerProperties, CriterionUniquenessMembership) {
  Gen gen(0x6B + GetParam().size());
  for (int i = 0; i < 40; ++i) {
    auto n = static_cast<std::size_t>(gen.range(1, 3));
    Ring r = make_ring(GetParam(), names(n));
    auto ideal = gen.ideal(r, 3, static_cast<std::uint32_t>(gen.range(1, 3)), 3);
    for (const auto& order : all_orders(n)) {
      auto gb = buchberger(ideal, order);
      ASSERT_TRUE(satisfies_buchberger_criterion(gb));
      for (const auto& g : ideal.generators()) ASSERT_TRUE(contains(gb, g));
      for (const auto& e : gb.elements) ASSERT_TRUE(e.leading_coeff(order).is_one());

      auto gens = ideal.generators();
      std::shuffle(gens.begin(), gens.end(), gen.engine());
      gens.push_back(gens.front());
      gens.push_back(gens.back() * gen.coeff(r.field(), true));
      auto again = buchberger(Ideal(r, gens), order);
      ASSERT_TRUE(same_set(gb.elements, again.elements));
    }
    // Members built from the generators plus random non-members agree across orders.
    Polynomial member(r);
    for (const auto& g : ideal.generators()) member += g * gen.poly(r, 2, 3);
    for (const auto& f : {member, member + gen.poly(r, 2, 2)}) {
      bool expect = contains(buchberger(ideal, MonomialOrder::grevlex()), f);
      for (const auto& order : all_orders(n)) ASSERT_EQ(contains(buchberger(ideal, order), f), expect);
    }
    ASSERT_TRUE(contains(ideal, member));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, GroebnerProperties, ::testing::Values("Fp:2", "Fp:3", "Q"),
                         [](const auto& info) { return info.param == "Q" ? std::string("Q") : "F" + info.param.substr(3); });
