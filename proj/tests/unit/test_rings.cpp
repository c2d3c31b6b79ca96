#include <gtest/gtest.h>

#include "bergq/comm_poly.hpp"
#include "bergq/error.hpp"
#include "bergq/random.hpp"
#include "bergq/rational_function.hpp"

using namespace bergq;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);
const Field F2 = Field::prime(2);
const Field F7 = Field::prime(7);

CommPoly P(const char* text, Field f = Q) { return CommPoly::parse(text, f); }

template <class Fn>
void expect_error(ErrorCode code, Fn fn) {
  try {
    fn();
    FAIL() << "expected " << error_code_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Scalar, RationalSum) {
  EXPECT_EQ(Scalar::parse(Q, "1/2") + Scalar::parse(Q, "1/3"), Scalar::parse(Q, "5/6"));
}

TEST(Scalar, PrimeFieldProduct) {
  EXPECT_EQ(Scalar(F5, 3) * Scalar(F5, 4), Scalar(F5, 2));
}

TEST(Scalar, DivisionByZero) {
  expect_error(ErrorCode::DivisionByZero, [] { return Scalar::parse(Q, "2/3") / Scalar::zero(Q); });
  expect_error(ErrorCode::DivisionByZero, [] { return Scalar(F5, 3) / Scalar(F5, 10); });
}

TEST(Scalar, FieldMismatch) {
  expect_error(ErrorCode::FieldMismatch, [] { return Scalar(F5, 1) + Scalar(Q, 1); });
  expect_error(ErrorCode::FieldMismatch, [] { return Scalar(F5, 1) * Scalar(F7, 1); });
}

TEST(Scalar, CanonicalForms) {
  auto q = Scalar(Q, mpz_class(-6), mpz_class(-4));
  EXPECT_EQ(q.to_string(), "3/2");
  EXPECT_EQ(Scalar(Q, mpz_class(6), mpz_class(-4)).to_string(), "-3/2");
  EXPECT_EQ(Scalar(F7, -1).residue(), 6u);
  EXPECT_EQ(Scalar(F7, -1).to_string(), "-1");
  EXPECT_EQ(Scalar::parse(F7, "1/2"), Scalar(F7, 4));
}

TEST(Scalar, PrimeCheckedAtFieldConstruction) {
  expect_error(ErrorCode::InvalidField, [] { return Field::prime(9); });
  expect_error(ErrorCode::InvalidField, [] { return Field::parse("fp:1"); });
  EXPECT_EQ(Field::parse("fp:7"), F7);
  EXPECT_EQ(Field::parse("q"), Q);
}

// Field axioms on 1000 seeded triples per field.
class FieldAxioms : public ::testing::TestWithParam<Field> {};

TEST_P(FieldAxioms, HoldOnRandomTriples) {
  const Field f = GetParam();
  RandomSource rng(101);
  for (int k = 0; k < 1000; ++k) {
    Scalar a = rng.scalar(f, 50), b = rng.scalar(f, 50), c = rng.scalar(f, 50);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a - a).is_zero());
    if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms, ::testing::Values(Field::rationals(), Field::prime(7), Field::prime(101)),
                         [](const auto& info) { return info.param.is_rational() ? std::string("Q") : "F" + std::to_string(info.param.characteristic()); });

TEST(Variable, OrderAndRendering) {
  auto a = Variable::entry(1, 2, 1);
  auto b = Variable::entry(2, 1, 1);
  auto u = Variable::aux("lam", 2);
  EXPECT_LT(a, b);
  EXPECT_LT(b, u);
  EXPECT_LT(Variable::aux("x", 1), Variable::aux("x", 2));
  EXPECT_LT(Variable::aux("x", 9), Variable::aux("y", 1));
  EXPECT_EQ(a.to_string(), "x1_2_1");
  EXPECT_EQ(Variable::parse("x1_2_1"), a);
  EXPECT_EQ(Variable::parse("lam2"), u);
  EXPECT_EQ(Variable::parse("u").to_string(), "u");
}

TEST(CommPoly, DifferenceOfSquares) {
  EXPECT_EQ(P("(x+y)*(x-y)"), P("x^2 - y^2"));
  EXPECT_EQ(P("x^2 - y^2").to_string(), "x^2 - y^2");
}

TEST(CommPoly, Cancellation) {
  auto r = P("x+1") + P("-x-1");
  EXPECT_TRUE(r.is_zero());
  EXPECT_TRUE(r.terms().empty());
}

TEST(CommPoly, FrobeniusInCharacteristicTwo) {
  EXPECT_EQ(P("x+y", F2).pow(2), P("x^2 + y^2", F2));
}

TEST(CommPoly, FieldMismatch) {
  expect_error(ErrorCode::FieldMismatch, [] { return P("x") + P("x", F5); });
  expect_error(ErrorCode::FieldMismatch, [] { return P("x") * P("x", F5); });
}

TEST(CommPoly, GradedLexOrder) {
  // Leading term is the highest total degree, ties broken with x > y.
  EXPECT_EQ(P("y^3 + x*y^2 + x^2").to_string(), "x*y^2 + y^3 + x^2");
  EXPECT_EQ(P("3/2*x - 1").to_string(), "3/2*x - 1");
}

TEST(PartialDerivative, Examples) {
  auto x = Variable::aux("x");
  EXPECT_EQ(partial_derivative(P("x^2*y"), x), P("2*x*y"));
  EXPECT_TRUE(partial_derivative(P("y^3"), x).is_zero());
  EXPECT_TRUE(partial_derivative(P("x^2", F2), x).is_zero());
}

TEST(PartialDerivative, Leibniz) {
  RandomSource rng(7);
  std::vector<Variable> vars{Variable::aux("x"), Variable::aux("y"), Variable::aux("z")};
  for (int k = 0; k < 200; ++k) {
    auto a = rng.comm_poly(Q, vars, 4, 5);
    auto b = rng.comm_poly(Q, vars, 4, 5);
    for (auto v : vars) {
      ASSERT_EQ(partial_derivative(a * b, v), a * partial_derivative(b, v) + b * partial_derivative(a, v));
    }
  }
}

TEST(Evaluate, Examples) {
  auto x = Variable::aux("x"), y = Variable::aux("y");
  EXPECT_EQ(evaluate(P("x^2 + y"), {{x, Scalar(Q, 2)}, {y, Scalar(Q, 3)}}), Scalar(Q, 7));
  EXPECT_EQ(evaluate(CommPoly(Q), {}), Scalar(Q, 0));
  EXPECT_EQ(evaluate(P("x*y"), {{x, Scalar::parse(Q, "1/2")}, {y, Scalar::parse(Q, "2/3")}}), Scalar::parse(Q, "1/3"));
  expect_error(ErrorCode::UnassignedVariable, [&] { return evaluate(P("x*y"), {{x, Scalar(Q, 1)}}); });
}

TEST(Evaluate, IsARingHomomorphism) {
  RandomSource rng(8);
  std::vector<Variable> vars{Variable::aux("x"), Variable::aux("y"), Variable::entry(1, 1, 2)};
  for (Field f : {Q, F7}) {
    for (int k = 0; k < 200; ++k) {
      auto a = rng.comm_poly(f, vars, 3, 4);
      auto b = rng.comm_poly(f, vars, 3, 4);
      std::map<Variable, Scalar> point;
      for (auto v : vars) point[v] = rng.scalar(f);
      ASSERT_EQ(evaluate(a * b, point), evaluate(a, point) * evaluate(b, point));
      ASSERT_EQ(evaluate(a + b, point), evaluate(a, point) + evaluate(b, point));
    }
  }
}

TEST(CommPoly, MultiplicationCommutesAndAssociates) {
  RandomSource rng(9);
  std::vector<Variable> vars;
  for (unsigned k = 1; k <= 6; ++k) vars.push_back(Variable::aux("v", k));
  for (int k = 0; k < 200; ++k) {
    auto a = rng.comm_poly(Q, vars, 4, 4);
    auto b = rng.comm_poly(Q, vars, 4, 4);
    auto c = rng.comm_poly(Q, vars, 4, 4);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(CommPoly, ParsePrintRoundTrip) {
  RandomSource rng(10);
  std::vector<Variable> vars{Variable::entry(1, 1, 1), Variable::entry(2, 1, 2), Variable::aux("lam", 1)};
  for (Field f : {Q, F7}) {
    for (int k = 0; k < 200; ++k) {
      auto a = rng.comm_poly(f, vars, 3, 5);
      ASSERT_EQ(CommPoly::parse(a.to_string(), f), a) << a.to_string();
    }
  }
}

TEST(Gcd, RecoversCommonFactor) {
  auto g = gcd(P("(x - y)*(x + 2*y)"), P("(x - y)^2*(y + 1)"));
  EXPECT_EQ(g, P("x - y"));
  EXPECT_EQ(gcd(P("x^2*y"), P("x*y^3")), P("x*y"));
  EXPECT_EQ(gcd(P("2*x + 2"), P("3")), P("1"));
  EXPECT_EQ(gcd(P("x^2 - 1", F7), P("x^2 + 2*x + 1", F7)), P("x + 1", F7));
}

TEST(Gcd, RandomProductsShareTheirCommonFactor) {
  RandomSource rng(11);
  std::vector<Variable> vars{Variable::aux("a"), Variable::aux("b"), Variable::aux("c")};
  for (int k = 0; k < 60; ++k) {
    auto common = rng.comm_poly(Q, vars, 2, 3);
    auto p = rng.comm_poly(Q, vars, 2, 3);
    auto q = rng.comm_poly(Q, vars, 2, 3);
    if (common.is_zero() || p.is_zero() || q.is_zero()) continue;
    auto g = gcd(common * p, common * q);
    CommPoly quotient;
    ASSERT_TRUE(divide_exact(common * p, g, quotient));
    ASSERT_TRUE(divide_exact(common * q, g, quotient));
    ASSERT_TRUE(divide_exact(g, gcd(common, common), quotient));
  }
}

TEST(RationalFunction, Examples) {
  RationalFunction diff(P("l1 - l2"));
  EXPECT_TRUE((RationalFunction(P("1"), P("l1 - l2")) * diff).is_one());
  RationalFunction a(P("l1"), P("l2"));
  EXPECT_TRUE((a + RationalFunction(P("-l1"), P("l2"))).is_zero());
  expect_error(ErrorCode::DivisionByZero, [] { return RationalFunction(P("1")) / RationalFunction(P("l1 - l1")); });
}

TEST(RationalFunction, CanonicalFormIgnoresCommonScaling) {
  RandomSource rng(12);
  std::vector<Variable> vars{Variable::aux("l", 1), Variable::aux("l", 2)};
  for (int k = 0; k < 100; ++k) {
    auto a = rng.comm_poly(Q, vars, 2, 3);
    auto b = rng.comm_poly(Q, vars, 2, 3);
    auto c = rng.comm_poly(Q, vars, 2, 3);
    if (b.is_zero() || c.is_zero()) continue;
    ASSERT_EQ(RationalFunction(c * a, c * b), RationalFunction(a, b));
    ASSERT_TRUE(RationalFunction(c * b, b) == RationalFunction(c));
  }
}

TEST(RationalFunction, DenominatorIsMonic) {
  RationalFunction r(P("2*x"), P("4*x*y - 6*x"));
  EXPECT_TRUE(r.denominator().leading_coefficient().is_one());
  EXPECT_EQ(r.numerator(), P("1/2"));
  EXPECT_EQ(r.denominator(), P("y - 3/2"));
}
