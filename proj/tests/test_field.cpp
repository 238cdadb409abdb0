#include <gtest/gtest.h>

#include "errors.hpp"
#include "field.hpp"
#include "support.hpp"

using namespace idealkit;
using namespace idealkit::testing;

namespace {

Field rational_function_field() { return Field::rational_functions(Field::rationals(), {"t"}); }

Coeff ratfunc(const Field& k, const std::string& num, const std::string& den) {
  return Coeff::rational_function(P(k.parameter_ring(), num), P(k.parameter_ring(), den));
}

}  // namespace

TEST(Field, RationalSum) {
  Field q = Field::rationals();
  Coeff s = q.from_rational(mpq_class(1, 2)) + q.from_rational(mpq_class(1, 3));
  EXPECT_EQ(s, q.from_rational(mpq_class(5, 6)));
  EXPECT_EQ(s.to_string(), "5/6");
}

TEST(Field, PrimeProduct) {
  Field f5 = Field::prime(5);
  EXPECT_EQ(f5.from_integer(3) * f5.from_integer(4), f5.from_integer(2));
  EXPECT_EQ(f5.from_integer(-1), f5.from_integer(4));
}

TEST(Field, RationalFunctionSum) {
  Field k = Field::rational_functions(Field::rationals(), {"x"});
  Coeff lhs = ratfunc(k, "1", "x") + ratfunc(k, "x", "1");
  EXPECT_EQ(lhs, ratfunc(k, "x^2 + 1", "x"));
}

TEST(Field, NormalizeStripsMonomialContent) {
  Field k = Field::rational_functions(Field::rationals(), {"x", "y"});
  Coeff c = ratfunc(k, "x^2*y", "x*y");
  EXPECT_EQ(c.numerator(), P(k.parameter_ring(), "x"));
  EXPECT_TRUE(c.denominator().is_one());
}

TEST(Field, NormalizeUnivariateGcd) {
  Field k = Field::rational_functions(Field::rationals(), {"x"});
  Coeff c = ratfunc(k, "x^2 - 1", "x - 1");
  EXPECT_EQ(c.numerator(), P(k.parameter_ring(), "x + 1"));
  EXPECT_TRUE(c.denominator().is_one());
}

TEST(Field, PartialNormalizationStillComparesEqual) {
  Field k = Field::rational_functions(Field::rationals(), {"x", "y"});
  EXPECT_EQ(ratfunc(k, "(x + y)^2", "x + y"), ratfunc(k, "x + y", "1"));
}

TEST(Field, DivisionByZero) {
  Field q = Field::rationals();
  try {
    (void)(q.one() / q.zero());
    FAIL() << "expected DivisionByZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
  Field k = rational_function_field();
  EXPECT_THROW((void)ratfunc(k, "t", "0"), Error);
  EXPECT_THROW((void)Field::prime(7).zero().inverse(), Error);
}

TEST(Field, Descriptors) {
  EXPECT_TRUE(Field::parse("Q").is_rational());
  EXPECT_EQ(Field::parse("Fp:7").modulus(), 7u);
  EXPECT_EQ(Field::parse("Q(x1,x2)").parameters().size(), 2u);
  EXPECT_EQ(Field::parse("Fp:2(t)").characteristic(), 2u);
  for (const char* bad : {"Fp:4", "Fp:1", "Fp:0", "R", "Fp:", "Q(", "Fp:1048583"}) {
    try {
      (void)Field::parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadFieldDescriptor) << bad;
    }
  }
}

TEST(Field, MixedFieldsRejected) {
  try {
    (void)(Field::prime(3).one() + Field::prime(5).one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedFields);
  }
}

class FieldAxioms : public ::testing::TestWithParam<std::string> {};

TEST_P(FieldAxioms, RandomTriples) {
  Field k = Field::parse(GetParam());
  Gen gen(0xF1E1D + GetParam().size());
  const Coeff zero = k.zero(), one = k.one();
  for (int i = 0; i < 1000; ++i) {
    Coeff a = gen.coeff(k), b = gen.coeff(k), c = gen.coeff(k);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + zero, a);
    ASSERT_EQ(a * one, a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_TRUE((a + (-a)).is_zero());
    if (!a.is_zero()) {
      ASSERT_TRUE((a * a.inverse()).is_one());
      ASSERT_EQ((b / a) * a, b);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Variants, FieldAxioms, ::testing::Values("Q", "Fp:7", "Fp:2", "Q(t)", "Fp:5(t)"),
                         [](const auto& info) {
                           std::string s;
                           for (char ch : info.param) s += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
                           return s;
                         });

TEST(Field, RationalFunctionCancellationProperty) {
  Field k = rational_function_field();
  const Ring& pr = k.parameter_ring();
  Gen gen(77);
  for (int i = 0; i < 300; ++i) {
    auto a = gen.poly(pr, 3, 3);
    auto b = gen.nonzero_poly(pr, 3, 3);
    Coeff q = Coeff::rational_function(a, b) * Coeff::rational_function(b, Polynomial::constant(pr, 1));
    // Cross-multiplication: q == a/1 means q.num * 1 == a * q.den.
    ASSERT_EQ(q.numerator(), a * q.denominator());
    ASSERT_EQ(q, Coeff::rational_function(a, Polynomial::constant(pr, 1)));
  }
}

TEST(Field, PrimeElementsEnumerated) {
  auto els = Field::prime(5).elements();
  ASSERT_EQ(els.size(), 5u);
  for (std::uint32_t i = 0; i < 5; ++i) EXPECT_EQ(els[i].mod().value, i);
}
