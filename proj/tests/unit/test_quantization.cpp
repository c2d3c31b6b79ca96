#include <gtest/gtest.h>

#include "bergq/quantization.hpp"
#include "bergq/random.hpp"
#include "support/oracles.hpp"

using namespace bergq;
using oracle::expect_error;

namespace {

const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

CommPoly P(const char* text, Field f = Q) { return CommPoly::parse(text, f); }
Variable V(const char* name) { return Variable::parse(name); }

PoissonTensor xy_tensor(Field f = Q) {
  PoissonTensor t(f, {V("x"), V("y"), V("z")});
  t.set(V("x"), V("y"), Scalar::one(f));
  return t;
}

// Pairing tensor on x1..xk, y1..yk.
PoissonTensor pairing(std::size_t k, Field f = Q) {
  std::vector<Variable> vars;
  for (std::size_t i = 1; i <= k; ++i) vars.push_back(Variable::aux("x", static_cast<std::uint32_t>(i)));
  for (std::size_t i = 1; i <= k; ++i) vars.push_back(Variable::aux("y", static_cast<std::uint32_t>(i)));
  return PoissonTensor::pairing(f, vars);
}

// A generic constant tensor with several nonzero entries.
PoissonTensor dense_tensor(const std::vector<Variable>& vars, RandomSource& rng, Field f = Q) {
  PoissonTensor t(f, vars);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) t.set(vars[i], vars[j], rng.scalar(f, 3));
  }
  return t;
}

FormalSeries lift(const CommPoly& p, std::size_t order) { return FormalSeries::lift(p, order); }

}  // namespace

TEST(PoissonTensor, PairingConvention) {
  auto t = pairing(2);
  EXPECT_EQ(t.entry(V("x1"), V("y1")), Scalar::one(Q));
  EXPECT_EQ(t.entry(V("y1"), V("x1")), -Scalar::one(Q));
  EXPECT_TRUE(t.entry(V("x1"), V("y2")).is_zero());
  EXPECT_TRUE(t.entry(V("x1"), V("x2")).is_zero());

  auto g = PoissonTensor::pairing(Q, {Variable::entry(1, 1, 2), Variable::entry(2, 1, 2), Variable::entry(2, 2, 1)});
  EXPECT_EQ(g.entry(Variable::entry(1, 1, 2), Variable::entry(2, 1, 2)), Scalar::one(Q));
  EXPECT_EQ(g.upper_triangle().size(), 1u);
}

TEST(PoissonTensor, Errors) {
  expect_error(ErrorCode::InvalidTensor, [] { return PoissonTensor(Q, {V("x"), V("x")}); });
  auto t = xy_tensor();
  expect_error(ErrorCode::InvalidTensor, [&] { t.set(V("x"), V("x"), Scalar::one(Q)); });
  expect_error(ErrorCode::UnknownVariable, [&] { t.set(V("x"), V("w"), Scalar::one(Q)); });
  expect_error(ErrorCode::UnknownVariable, [&] { return poisson_bracket(P("w"), P("x"), t); });
}

TEST(PoissonBracket, Examples) {
  auto t = xy_tensor();
  EXPECT_EQ(poisson_bracket(P("x"), P("y"), t), P("1"));
  EXPECT_EQ(poisson_bracket(P("x^2"), P("y"), t), P("2*x"));
  EXPECT_TRUE(poisson_bracket(P("x"), P("z"), t).is_zero());
}

TEST(PoissonBracket, AntisymmetryJacobiLeibniz) {
  RandomSource rng(41);
  std::vector<Variable> vars{V("a"), V("b"), V("c"), V("d")};
  for (int k = 0; k < 100; ++k) {
    auto t = dense_tensor(vars, rng);
    auto a = rng.comm_poly(Q, vars, 3, 4), b = rng.comm_poly(Q, vars, 3, 4), c = rng.comm_poly(Q, vars, 3, 4);
    ASSERT_EQ(poisson_bracket(a, b, t), -poisson_bracket(b, a, t));
    ASSERT_TRUE((poisson_bracket(a, poisson_bracket(b, c, t), t) + poisson_bracket(b, poisson_bracket(c, a, t), t) +
                 poisson_bracket(c, poisson_bracket(a, b, t), t))
                    .is_zero());
    ASSERT_EQ(poisson_bracket(a, b * c, t), poisson_bracket(a, b, t) * c + b * poisson_bracket(a, c, t));
    ASSERT_EQ(poisson_bracket(a, b, t), oracle::naive_bracket(a, b, t));
  }
}

TEST(StarContext, Guard) {
  auto t7 = xy_tensor(F7);
  EXPECT_NO_THROW(StarContext(t7, 6));
  expect_error(ErrorCode::CharacteristicTooSmall, [&] { return StarContext(t7, 7); });
  expect_error(ErrorCode::CharacteristicTooSmall, [&] { return StarContext(t7, 9); });
  auto t2 = xy_tensor(Field::prime(2));
  EXPECT_NO_THROW(StarContext(t2, 0));
  expect_error(ErrorCode::CharacteristicTooSmall, [&] { return StarContext(t2, 1); });
  EXPECT_NO_THROW(StarContext(xy_tensor(), 40));
}

TEST(StarMul, Examples) {
  StarContext ctx(xy_tensor(), 2);
  auto xy = star_mul(lift(P("x"), 2), lift(P("y"), 2), ctx);
  EXPECT_EQ(xy[0], P("x*y"));
  EXPECT_EQ(xy[1], P("1/2"));
  EXPECT_TRUE(xy[2].is_zero());
  EXPECT_EQ(xy.to_string(), "x*y + 1/2*h");
  auto yx = star_mul(lift(P("y"), 2), lift(P("x"), 2), ctx);
  EXPECT_EQ(yx.to_string(), "x*y - 1/2*h");
  RandomSource rng(42);
  for (int k = 0; k < 20; ++k) {
    auto a = lift(rng.comm_poly(Q, {V("x"), V("y"), V("z")}, 3, 4), 2);
    EXPECT_EQ(star_mul(a, lift(P("1"), 2), ctx), a);
    EXPECT_EQ(star_mul(lift(P("1"), 2), a, ctx), a);
  }
}

TEST(StarMul, HigherOrderTermsAgreeWithOracle) {
  RandomSource rng(43);
  std::vector<Variable> vars{V("a"), V("b"), V("c")};
  for (int k = 0; k < 40; ++k) {
    auto t = dense_tensor(vars, rng);
    auto a = rng.comm_poly(Q, vars, 3, 3), b = rng.comm_poly(Q, vars, 3, 3);
    for (std::size_t r = 0; r <= 3; ++r) ASSERT_EQ(moyal_term(a, b, r, t), oracle::naive_moyal_term(a, b, r, t)) << r;
  }
}

TEST(StarMul, OrderZeroIsTheCommutativeProduct) {
  RandomSource rng(44);
  std::vector<Variable> vars{V("x1"), V("x2"), V("y1"), V("y2")};
  StarContext ctx(pairing(2), 3);
  for (int k = 0; k < 50; ++k) {
    auto a = rng.comm_poly(Q, vars, 3, 4), b = rng.comm_poly(Q, vars, 3, 4);
    ASSERT_EQ(star_mul(lift(a, 3), lift(b, 3), ctx)[0], a * b);
  }
}

TEST(StarMul, ZeroTensorIsCommutative) {
  RandomSource rng(45);
  std::vector<Variable> vars{V("a"), V("b")};
  StarContext ctx(PoissonTensor(Q, vars), 3);
  for (int k = 0; k < 30; ++k) {
    auto a = rng.comm_poly(Q, vars, 3, 4), b = rng.comm_poly(Q, vars, 3, 4);
    ASSERT_EQ(star_mul(lift(a, 3), lift(b, 3), ctx), lift(a * b, 3));
  }
}

TEST(StarMul, AssociativeAsTruncatedSeries) {
  RandomSource rng(46);
  std::vector<Variable> vars{V("x1"), V("x2"), V("y1"), V("y2")};
  for (std::size_t order : {1u, 2u, 3u}) {
    StarContext ctx(dense_tensor(vars, rng), order);
    for (int k = 0; k < 25; ++k) {
      auto a = lift(rng.comm_poly(Q, vars, 3, 3), order), b = lift(rng.comm_poly(Q, vars, 3, 3), order),
           c = lift(rng.comm_poly(Q, vars, 3, 3), order);
      ASSERT_EQ(star_mul(star_mul(a, b, ctx), c, ctx), star_mul(a, star_mul(b, c, ctx), ctx));
    }
  }
}

TEST(StarMul, Errors) {
  StarContext ctx(xy_tensor(), 2);
  expect_error(ErrorCode::UnknownVariable, [&] { return star_mul(lift(P("w"), 2), lift(P("x"), 2), ctx); });
  expect_error(ErrorCode::ShapeMismatch, [&] { return star_mul(lift(P("x"), 3), lift(P("x"), 2), ctx); });
  expect_error(ErrorCode::FieldMismatch, [&] { return star_mul(lift(P("x", F7), 2), lift(P("x", F7), 2), ctx); });
}

TEST(StarCommutator, Examples) {
  StarContext ctx(xy_tensor(), 2);
  EXPECT_EQ(star_commutator(lift(P("x"), 2), lift(P("y"), 2), ctx).to_string(), "h");
  StarContext ctx4(xy_tensor(), 4);
  EXPECT_TRUE(star_commutator(lift(P("x"), 4), lift(P("x^2"), 4), ctx4).is_zero());
  RandomSource rng(47);
  for (int k = 0; k < 20; ++k) {
    auto a = lift(rng.comm_poly(Q, {V("x"), V("y")}, 3, 3), 4), b = lift(rng.comm_poly(Q, {V("x"), V("y")}, 3, 3), 4);
    auto ab = star_commutator(a, b, ctx4), ba = star_commutator(b, a, ctx4);
    ASSERT_TRUE((ab + ba).is_zero());
    ASSERT_TRUE(ab[0].is_zero());
  }
}

TEST(Correspondence, Examples) {
  StarContext ctx(xy_tensor(), 2);
  EXPECT_TRUE(verify_correspondence(P("x"), P("y"), ctx).holds);
  EXPECT_EQ(verify_correspondence(P("x"), P("y"), ctx).star_h1, P("1"));
  EXPECT_TRUE(verify_correspondence(P("x"), P("x"), ctx).holds);
  expect_error(ErrorCode::InvalidSize, [] { return verify_correspondence(P("x"), P("y"), StarContext(xy_tensor(), 1)); });
}

TEST(Correspondence, RandomPairs) {
  RandomSource rng(kDefaultSeed);
  std::vector<Variable> vars{V("x1"), V("x2"), V("y1"), V("y2")};
  for (Field f : {Q, F7}) {
    StarContext ctx(pairing(2, f), 2);
    for (int k = 0; k < 200; ++k) {
      auto a = rng.comm_poly(f, vars, 3, 4), b = rng.comm_poly(f, vars, 3, 4);
      auto r = verify_correspondence(a, b, ctx);
      ASSERT_TRUE(r.holds);
      ASSERT_EQ(r.bracket, oracle::naive_bracket(a, b, ctx.tensor()));
    }
  }
}

TEST(MatrixStar, OneByOne) {
  StarContext ctx(xy_tensor(), 2);
  SeriesMatrix f(1, 1, lift(P("x"), 2)), g(1, 1, lift(P("y"), 2));
  auto c = matrix_star(f, g, ctx, MatrixStarOp::Commutator);
  EXPECT_TRUE(series_coefficient(c, 0).is_zero());
  EXPECT_EQ(series_coefficient(c, 1)(0, 0), P("1"));
}

TEST(MatrixStar, DiagonalPairing) {
  StarContext ctx(pairing(2), 2);
  SeriesMatrix zero(2, 2, FormalSeries(Q, 2));
  SeriesMatrix f = zero, g = zero;
  f(0, 0) = lift(P("x1"), 2);
  f(1, 1) = lift(P("x2"), 2);
  g(0, 0) = lift(P("y1"), 2);
  g(1, 1) = lift(P("y2"), 2);
  auto c = matrix_star(f, g, ctx, MatrixStarOp::Commutator);
  PolyMatrix expected(2, 2, CommPoly(Q));
  expected(0, 0) = P("1");
  expected(1, 1) = P("1");
  EXPECT_EQ(series_coefficient(c, 1), expected);
  EXPECT_TRUE(series_coefficient(c, 0).is_zero());
}

TEST(MatrixStar, IdentityIsCentral) {
  StarContext ctx(pairing(2), 3);
  RandomSource rng(48);
  std::vector<Variable> vars{V("x1"), V("x2"), V("y1"), V("y2")};
  PolyMatrix b(2, 2, CommPoly(Q));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = rng.comm_poly(Q, vars, 2, 3);
  auto c = matrix_star(series_identity(2, ctx), quantize_lift(b, ctx), ctx, MatrixStarOp::Commutator);
  for (std::size_t r = 0; r <= 3; ++r) EXPECT_TRUE(series_coefficient(c, r).is_zero());
  expect_error(ErrorCode::ShapeMismatch,
               [&] { return matrix_star(series_identity(2, ctx), series_identity(3, ctx), ctx, MatrixStarOp::Multiply); });
}

TEST(QuantizeLift, RoundTrip) {
  std::vector<Variable> vars;
  for (unsigned l = 1; l <= 2; ++l)
    for (unsigned i = 1; i <= 2; ++i)
      for (unsigned j = 1; j <= 2; ++j) vars.push_back(Variable::entry(l, i, j));
  StarContext ctx(PoissonTensor::pairing(Q, vars), 2);
  auto x = make_generic(2, 2, Q);
  auto lifted = quantize_lift(x[0], ctx);
  EXPECT_EQ(series_coefficient(lifted, 0), x[0].entries());
  EXPECT_TRUE(series_coefficient(lifted, 1).is_zero());
  EXPECT_TRUE(series_coefficient(lifted, 2).is_zero());
  auto z = quantize_lift(GenericMatrix::zero(2, Q), ctx);
  for (const auto& s : z.entries()) EXPECT_TRUE(s.is_zero());
  auto big = make_generic(1, 3, Q)[0];
  expect_error(ErrorCode::UnknownVariable, [&] { return quantize_lift(big, ctx); });
}
