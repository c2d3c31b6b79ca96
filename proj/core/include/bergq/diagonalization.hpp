#pragma once

// Perturbative diagonalization of A = A_0 + h A_1 + ... with A_0 diagonal
// and simple spectrum. At order r the off-diagonal part O of the current
// conjugate is removed by (E + h^r T) with [T, A_0] = -O; the diagonal part
// is kept and becomes the order-r term of D. All products here are the
// plain (entrywise commutative) matrix products of the series ring.
//
// F is Scalar (numeric eigenvalues) or RationalFunction (symbolic ones).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bergq/error.hpp"
#include "bergq/matrix.hpp"
#include "bergq/quantization.hpp"
#include "bergq/rational_function.hpp"

namespace bergq {

// sum_{r=0}^{N} h^r * coefficient(r), each coefficient an n x n matrix.
template <class F>
class FieldSeriesMatrix {
 public:
  FieldSeriesMatrix(std::vector<Matrix<F>> coefficients) : coeffs_(std::move(coefficients)) {  // NOLINT
    if (coeffs_.empty()) raise(ErrorCode::InvalidSize, "series needs at least the order-0 coefficient");
    for (const auto& c : coeffs_) {
      if (!c.is_square() || c.rows() != coeffs_.front().rows() || c.rows() == 0) {
        raise(ErrorCode::ShapeMismatch, "series coefficients must be square of one size");
      }
    }
  }

  static FieldSeriesMatrix identity(std::size_t n, std::size_t order, const F& zero, const F& one) {
    std::vector<Matrix<F>> c(order + 1, Matrix<F>(n, n, zero));
    c[0] = Matrix<F>::identity(n, zero, one);
    return FieldSeriesMatrix(std::move(c));
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.front().rows(); }
  const Matrix<F>& operator[](std::size_t r) const { return coeffs_.at(r); }
  Matrix<F>& operator[](std::size_t r) { return coeffs_.at(r); }

  // Truncated at the smaller order of the two operands.
  friend FieldSeriesMatrix operator*(const FieldSeriesMatrix& a, const FieldSeriesMatrix& b) {
    const std::size_t n = std::min(a.order(), b.order());
    const F z = a.coeffs_.front()(0, 0) - a.coeffs_.front()(0, 0);
    std::vector<Matrix<F>> out(n + 1, Matrix<F>(a.size(), a.size(), z));
    for (std::size_t p = 0; p <= n; ++p) {
      if (a.coeffs_[p].is_zero()) continue;
      for (std::size_t q = 0; p + q <= n; ++q) {
        if (b.coeffs_[q].is_zero()) continue;
        out[p + q] = out[p + q] + a.coeffs_[p] * b.coeffs_[q];
      }
    }
    return FieldSeriesMatrix(std::move(out));
  }

  friend bool operator==(const FieldSeriesMatrix&, const FieldSeriesMatrix&) = default;

 private:
  std::vector<Matrix<F>> coeffs_;
};

// t_ij = rhs_ij / (lambda_i - lambda_j), t_ii = 0, so [T, diag(lambda)] = -rhs.
// The identity is re-checked before returning.
template <class F>
Matrix<F> solve_sylvester_diag(const std::vector<F>& lambda, const Matrix<F>& rhs) {
  const std::size_t n = lambda.size();
  if (rhs.rows() != n || rhs.cols() != n || n == 0) raise(ErrorCode::ShapeMismatch, "Sylvester right-hand side shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (!rhs(i, i).is_zero()) raise(ErrorCode::NonzeroDiagonalRHS, "entry (" + std::to_string(i + 1) + "," +
                                                                       std::to_string(i + 1) + ") is nonzero");
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((lambda[i] - lambda[j]).is_zero()) {
        raise(ErrorCode::RepeatedEigenvalue,
              "eigenvalues " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      }
    }
  }
  const F z = lambda[0] - lambda[0];
  Matrix<F> t(n, n, z);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !rhs(i, j).is_zero()) t(i, j) = rhs(i, j) / (lambda[i] - lambda[j]);
    }
  }
  const Matrix<F> a0 = Matrix<F>::diagonal(lambda, z);
  if (!(commutator(t, a0) == -rhs)) raise(ErrorCode::InvalidReport, "internal: Sylvester solution fails its check");
  return t;
}

template <class F>
struct DiagonalReport {
  FieldSeriesMatrix<F> conjugator;          // U = E + h T_1 + ...
  FieldSeriesMatrix<F> conjugator_inverse;  // U^{-1}
  FieldSeriesMatrix<F> diagonal;            // D = U A U^{-1} through the achieved order
  std::size_t achieved_order = 0;
  std::vector<F> eigenvalues;               // diagonal of A_0 (lambda_i)
  // Companion series conjugated by the same U (mu_i = its order-0 diagonal).
  std::optional<FieldSeriesMatrix<F>> companion_conjugate;
  std::vector<F> companion_eigenvalues;
  bool companion_diagonal = false;
  // U A U^{-1} is diagonal through achieved_order and U U^{-1} = E.
  bool verified = false;

  friend bool operator==(const DiagonalReport&, const DiagonalReport&) = default;
};

namespace detail {

template <class F>
Matrix<F> off_diagonal(const Matrix<F>& m) {
  Matrix<F> out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) = m(i, i) - m(i, i);
  return out;
}

template <class F>
bool diagonal_through(const FieldSeriesMatrix<F>& m, std::size_t order) {
  for (std::size_t r = 0; r <= order && r <= m.order(); ++r) {
    if (!m[r].is_diagonal()) return false;
  }
  return true;
}

}  // namespace detail

template <class F>
DiagonalReport<F> successive_diagonalize(const FieldSeriesMatrix<F>& a, std::size_t target,
                                         const FieldSeriesMatrix<F>* companion = nullptr) {
  if (target > a.order()) {
    raise(ErrorCode::InvalidSize, "target order " + std::to_string(target) + " exceeds series order " +
                                      std::to_string(a.order()));
  }
  const std::size_t n = a.size();
  if (!a[0].is_diagonal()) raise(ErrorCode::NotDiagonalLeadingTerm, "order-0 coefficient is not diagonal");
  std::vector<F> lambda;
  for (std::size_t i = 0; i < n; ++i) lambda.push_back(a[0](i, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((lambda[i] - lambda[j]).is_zero()) {
        raise(ErrorCode::RepeatedEigenvalue,
              "eigenvalues " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      }
    }
  }
  const F zero = lambda[0] - lambda[0];
  const F one = F(Scalar::one(lambda[0].field()));

  // Work at the target order.
  std::vector<Matrix<F>> truncated;
  for (std::size_t r = 0; r <= target; ++r) truncated.push_back(a[r]);
  const FieldSeriesMatrix<F> series(std::move(truncated));

  auto u = FieldSeriesMatrix<F>::identity(n, target, zero, one);
  auto u_inv = u;
  auto conj = series;
  for (std::size_t r = 1; r <= target; ++r) {
    Matrix<F> defect = detail::off_diagonal(conj[r]);
    if (defect.is_zero()) continue;
    Matrix<F> t = solve_sylvester_diag(lambda, defect);
    // step = E + h^r T, step^{-1} = sum_k (-h^r T)^k truncated at target.
    auto step = FieldSeriesMatrix<F>::identity(n, target, zero, one);
    step[r] = t;
    auto step_inv = FieldSeriesMatrix<F>::identity(n, target, zero, one);
    Matrix<F> power = Matrix<F>::identity(n, zero, one);
    for (std::size_t k = 1; k * r <= target; ++k) {
      power = power * (-t);
      step_inv[k * r] = power;
    }
    u = step * u;
    u_inv = u_inv * step_inv;
    conj = u * series * u_inv;
  }

  DiagonalReport<F> report{u, u_inv, conj, target, lambda, std::nullopt, {}, false, false};
  const auto id = FieldSeriesMatrix<F>::identity(n, target, zero, one);
  report.verified = detail::diagonal_through(conj, target) && (u * u_inv == id) && (u_inv * u == id);
  if (companion) {
    std::vector<Matrix<F>> c;
    for (std::size_t r = 0; r <= target && r <= companion->order(); ++r) c.push_back((*companion)[r]);
    auto cc = u * FieldSeriesMatrix<F>(std::move(c)) * u_inv;
    for (std::size_t i = 0; i < n; ++i) report.companion_eigenvalues.push_back(cc[0](i, i));
    report.companion_diagonal = detail::diagonal_through(cc, cc.order());
    report.companion_conjugate = std::move(cc);
  }
  return report;
}

// Diagonal of (1/h)[f, g]_* mod h for series matrices with diagonal order-0
// parts, compared with the brackets {lambda_i, mu_i} of those diagonals.
struct DiagonalBracketReport {
  PolyMatrix order0;               // [f, g]_* at h^0 (zero when order-0 parts commute)
  PolyMatrix order1;               // [f, g]_* at h^1, full matrix
  std::vector<CommPoly> diagonal;  // diagonal of order1
  std::vector<CommPoly> brackets;  // {lambda_i, mu_i}
  std::vector<bool> entry_equal;
  // Contributions involving off-diagonal parts of f or g have zero diagonal.
  bool off_diagonal_contributions_traceless = false;
  bool all_equal = false;
  // Some diagonal entry of the h^1 commutator is nonzero.
  bool nonvanishing = false;

  friend bool operator==(const DiagonalBracketReport&, const DiagonalBracketReport&) = default;
};

DiagonalBracketReport eq1_diagonal_check(const SeriesMatrix& f, const SeriesMatrix& g, const StarContext& ctx);

}  // namespace bergq
