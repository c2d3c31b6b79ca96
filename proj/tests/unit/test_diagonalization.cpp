#include <gtest/gtest.h>

#include "bergq/diagonalization.hpp"
#include "bergq/random.hpp"
#include "support/oracles.hpp"

using namespace bergq;
using oracle::expect_error;

namespace {

const Field Q = Field::rationals();
using RF = RationalFunction;
using RMatrix = Matrix<RF>;

RF R(const char* text) { return RF(CommPoly::parse(text, Q)); }
RF R(const char* num, const char* den) { return RF(CommPoly::parse(num, Q), CommPoly::parse(den, Q)); }

RMatrix rmatrix(std::initializer_list<std::initializer_list<RF>> rows) {
  RMatrix m(rows.size(), rows.size(), R("0"));
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

std::vector<RF> lambdas(std::size_t n) {
  std::vector<RF> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(RF(CommPoly(Q, Variable::aux("l", static_cast<std::uint32_t>(i)))));
  return out;
}

// Back-substitution: U A U^{-1} recomputed coefficient by coefficient with
// explicit triple sums.
template <class F>
Matrix<F> coefficient_of_conjugate(const FieldSeriesMatrix<F>& u, const FieldSeriesMatrix<F>& a,
                                   const FieldSeriesMatrix<F>& uinv, std::size_t r) {
  const F zero = a[0](0, 0) - a[0](0, 0);
  Matrix<F> acc(a.size(), a.size(), zero);
  for (std::size_t p = 0; p <= r; ++p)
    for (std::size_t q = 0; p + q <= r; ++q) acc = acc + u[p] * a[q] * uinv[r - p - q];
  return acc;
}

FormalSeries lift(const char* text, std::size_t order) { return FormalSeries::lift(CommPoly::parse(text, Q), order); }

SeriesMatrix diag_series(const std::vector<const char*>& entries, std::size_t order) {
  SeriesMatrix m(entries.size(), entries.size(), FormalSeries(Q, order));
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = lift(entries[i], order);
  return m;
}

PoissonTensor pairing(std::size_t k) {
  std::vector<Variable> vars;
  for (std::size_t i = 1; i <= k; ++i) vars.push_back(Variable::aux("x", static_cast<std::uint32_t>(i)));
  for (std::size_t i = 1; i <= k; ++i) vars.push_back(Variable::aux("y", static_cast<std::uint32_t>(i)));
  vars.push_back(Variable::aux("x"));
  vars.push_back(Variable::aux("y"));
  return PoissonTensor::pairing(Q, vars);
}

}  // namespace

TEST(Sylvester, SymbolicTwoByTwo) {
  auto l = lambdas(2);
  auto t = solve_sylvester_diag(l, rmatrix({{R("0"), R("1")}, {R("1"), R("0")}}));
  EXPECT_EQ(t, rmatrix({{R("0"), R("1", "l1 - l2")}, {R("1", "l2 - l1"), R("0")}}));
  auto a0 = RMatrix::diagonal(l, R("0"));
  EXPECT_EQ(t * a0 - a0 * t, -rmatrix({{R("0"), R("1")}, {R("1"), R("0")}}));
}

TEST(Sylvester, ZeroRhsAndErrors) {
  auto l = lambdas(3);
  EXPECT_TRUE(solve_sylvester_diag(l, RMatrix(3, 3, R("0"))).is_zero());
  std::vector<Scalar> repeated{Scalar(Q, 1), Scalar(Q, 1)};
  expect_error(ErrorCode::RepeatedEigenvalue,
               [&] { return solve_sylvester_diag(repeated, Matrix<Scalar>(2, 2, Scalar(Q, 0))); });
  auto rhs = RMatrix(2, 2, R("0"));
  rhs(1, 1) = R("1");
  expect_error(ErrorCode::NonzeroDiagonalRHS, [&] { return solve_sylvester_diag(lambdas(2), rhs); });
}

TEST(Sylvester, RandomNumericInstances) {
  RandomSource rng(51);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    std::vector<Scalar> l;
    for (std::size_t i = 0; i < n; ++i) l.push_back(Scalar(Q, static_cast<long>(3 * i) + rng.integer(0, 2)));
    auto rhs = rng.integer_matrix(Q, n, 5);
    for (std::size_t i = 0; i < n; ++i) rhs(i, i) = Scalar(Q, 0);
    auto t = solve_sylvester_diag(l, rhs);
    auto a0 = Matrix<Scalar>::diagonal(l, Scalar(Q, 0));
    ASSERT_EQ(t * a0 - a0 * t, -rhs);
    for (std::size_t i = 0; i < n; ++i) ASSERT_TRUE(t(i, i).is_zero());
  }
}

TEST(Diagonalize, OffDiagonalPerturbationAtOrderOne) {
  auto l = lambdas(2);
  FieldSeriesMatrix<RF> a({RMatrix::diagonal(l, R("0")), rmatrix({{R("0"), R("1")}, {R("1"), R("0")}})});
  auto rep = successive_diagonalize(a, 1);
  EXPECT_TRUE(rep.verified);
  EXPECT_EQ(rep.diagonal[0], RMatrix::diagonal(l, R("0")));
  EXPECT_TRUE(rep.diagonal[1].is_zero());
  EXPECT_EQ(rep.eigenvalues, l);
  for (std::size_t r = 0; r <= 1; ++r) {
    EXPECT_TRUE(coefficient_of_conjugate(rep.conjugator, a, rep.conjugator_inverse, r).is_diagonal());
  }
  EXPECT_EQ(rep.conjugator[0], RMatrix::identity(2, R("0"), R("1")));
}

TEST(Diagonalize, DiagonalPerturbationNeedsNoConjugation) {
  auto l = lambdas(2);
  FieldSeriesMatrix<RF> a({RMatrix::diagonal(l, R("0")), RMatrix::diagonal({R("d1"), R("d2")}, R("0"))});
  auto rep = successive_diagonalize(a, 1);
  EXPECT_EQ(rep.conjugator, FieldSeriesMatrix<RF>::identity(2, 1, R("0"), R("1")));
  EXPECT_EQ(rep.diagonal, a);
}

TEST(Diagonalize, AlreadyDiagonalAtAllOrders) {
  std::vector<Matrix<Scalar>> c;
  for (long r = 0; r <= 3; ++r) {
    c.push_back(Matrix<Scalar>::diagonal({Scalar(Q, 1 + r), Scalar(Q, 5 - r), Scalar(Q, -2 * r)}, Scalar(Q, 0)));
  }
  FieldSeriesMatrix<Scalar> a(c);
  for (std::size_t target = 0; target <= 3; ++target) {
    auto rep = successive_diagonalize(a, target);
    EXPECT_EQ(rep.conjugator, FieldSeriesMatrix<Scalar>::identity(3, target, Scalar(Q, 0), Scalar(Q, 1)));
    for (std::size_t r = 0; r <= target; ++r) EXPECT_EQ(rep.diagonal[r], a[r]);
  }
}

TEST(Diagonalize, DenseSymbolicThreeByThreeToOrderTwo) {
  auto l = lambdas(3);
  RandomSource rng(kDefaultSeed);
  RMatrix m(3, 3, R("0"));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) m(i, j) = RF(CommPoly(Scalar(Q, rng.integer(1, 5))));
  FieldSeriesMatrix<RF> a({RMatrix::diagonal(l, R("0")), m, RMatrix(3, 3, R("0"))});
  auto rep = successive_diagonalize(a, 2);
  EXPECT_TRUE(rep.verified);
  for (std::size_t r = 0; r <= 2; ++r) {
    auto c = coefficient_of_conjugate(rep.conjugator, a, rep.conjugator_inverse, r);
    EXPECT_TRUE(c.is_diagonal()) << r;
    EXPECT_EQ(c, rep.diagonal[r]);
  }
}

TEST(Diagonalize, NumericRandomSeries) {
  RandomSource rng(52);
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = 3;
    std::vector<Matrix<Scalar>> c{Matrix<Scalar>::diagonal({Scalar(Q, 1), Scalar(Q, -2), Scalar(Q, 7)}, Scalar(Q, 0))};
    for (int r = 1; r <= 3; ++r) c.push_back(rng.integer_matrix(Q, n, 4));
    FieldSeriesMatrix<Scalar> a(c);
    auto rep = successive_diagonalize(a, 3);
    ASSERT_TRUE(rep.verified);
    for (std::size_t r = 0; r <= 3; ++r) {
      ASSERT_EQ(coefficient_of_conjugate(rep.conjugator, a, rep.conjugator_inverse, r), rep.diagonal[r]);
    }
  }
}

TEST(Diagonalize, CompanionSharesTheConjugator) {
  // B = p(A) for a polynomial p commutes with A and is diagonalized by the same U.
  auto l = lambdas(2);
  FieldSeriesMatrix<RF> a({RMatrix::diagonal(l, R("0")), rmatrix({{R("0"), R("1")}, {R("2"), R("0")}}),
                           RMatrix(2, 2, R("0"))});
  auto b = a * a;
  auto rep = successive_diagonalize(a, 2, &b);
  EXPECT_TRUE(rep.companion_diagonal);
  EXPECT_EQ(rep.companion_eigenvalues, (std::vector<RF>{R("l1^2"), R("l2^2")}));
}

TEST(Diagonalize, Errors) {
  FieldSeriesMatrix<Scalar> repeated({Matrix<Scalar>::diagonal({Scalar(Q, 1), Scalar(Q, 1)}, Scalar(Q, 0))});
  expect_error(ErrorCode::RepeatedEigenvalue, [&] { return successive_diagonalize(repeated, 0); });
  Matrix<Scalar> full(2, 2, Scalar(Q, 1));
  expect_error(ErrorCode::NotDiagonalLeadingTerm, [&] { return successive_diagonalize(FieldSeriesMatrix<Scalar>({full}), 0); });
  FieldSeriesMatrix<Scalar> ok({Matrix<Scalar>::diagonal({Scalar(Q, 1), Scalar(Q, 2)}, Scalar(Q, 0))});
  expect_error(ErrorCode::InvalidSize, [&] { return successive_diagonalize(ok, 1); });
}

TEST(DiagonalBrackets, PairingTwoByTwo) {
  StarContext ctx(pairing(3), 2);
  auto r = eq1_diagonal_check(diag_series({"x1", "x2"}, 2), diag_series({"y1", "y2"}, 2), ctx);
  EXPECT_EQ(r.diagonal, (std::vector<CommPoly>{CommPoly::parse("1", Q), CommPoly::parse("1", Q)}));
  EXPECT_TRUE(r.all_equal);
  EXPECT_TRUE(r.nonvanishing);
  EXPECT_TRUE(r.order0.is_zero());
  EXPECT_TRUE(r.off_diagonal_contributions_traceless);
}

TEST(DiagonalBrackets, DependentPairVanishes) {
  StarContext ctx(pairing(3), 2);
  auto r = eq1_diagonal_check(diag_series({"x1", "x2"}, 2), diag_series({"x1^2", "x2^2"}, 2), ctx);
  EXPECT_EQ(r.diagonal, (std::vector<CommPoly>{CommPoly(Q), CommPoly(Q)}));
  EXPECT_TRUE(r.all_equal);
  EXPECT_FALSE(r.nonvanishing);
}

TEST(DiagonalBrackets, OneByOne) {
  StarContext ctx(pairing(1), 2);
  auto r = eq1_diagonal_check(diag_series({"x"}, 2), diag_series({"y"}, 2), ctx);
  EXPECT_EQ(r.diagonal, std::vector<CommPoly>{CommPoly::parse("1", Q)});
}

TEST(DiagonalBrackets, OffDiagonalHigherOrderPartsDoNotReachTheDiagonal) {
  // Diagonal leading terms with off-diagonal corrections at order h.
  StarContext ctx(pairing(3), 2);
  auto f = diag_series({"x1", "x2", "x3"}, 2);
  auto g = diag_series({"y1", "y2", "y3^2"}, 2);
  f(0, 1)[1] = CommPoly::parse("y2", Q);
  f(2, 0)[1] = CommPoly::parse("x1*x3", Q);
  g(1, 2)[1] = CommPoly::parse("x2 + 1", Q);
  auto r = eq1_diagonal_check(f, g, ctx);
  EXPECT_TRUE(r.off_diagonal_contributions_traceless);
  EXPECT_TRUE(r.all_equal);
  EXPECT_EQ(r.brackets[2], CommPoly::parse("2*y3", Q));
}

TEST(DiagonalBrackets, RejectsNonDiagonalLeadingTerms) {
  StarContext ctx(pairing(2), 2);
  auto f = diag_series({"x1", "x2"}, 2);
  f(0, 1) = lift("x1", 2);
  expect_error(ErrorCode::NotDiagonalLeadingTerm, [&] { return eq1_diagonal_check(f, diag_series({"y1", "y2"}, 2), ctx); });
}
