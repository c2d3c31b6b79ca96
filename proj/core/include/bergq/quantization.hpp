#pragma once

// Constant Poisson tensors and the truncated Moyal star product on
// k[vars][[h]], entrywise extended to matrices with series entries.

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bergq/comm_poly.hpp"
#include "bergq/generic_matrix.hpp"
#include "bergq/matrix.hpp"

namespace bergq {

// Constant antisymmetric tensor Pi on an ordered variable list:
// {v_i, v_j} = Pi^{ij}.
class PoissonTensor {
 public:
  PoissonTensor(Field field, std::vector<Variable> variables);

  // Pairs x_ij^1 with x_ij^2 and auxiliary x<k> with y<k> (bracket +1), for
  // whichever of those partners occur in `variables`.
  static PoissonTensor pairing(Field field, std::vector<Variable> variables);

  // Sets Pi^{ij} = c and Pi^{ji} = -c. Throws UnknownVariable, InvalidTensor
  // for i == j with c != 0.
  void set(Variable vi, Variable vj, const Scalar& c);

  Field field() const noexcept { return field_; }
  const std::vector<Variable>& variables() const noexcept { return vars_; }
  bool contains(Variable v) const;
  Scalar entry(Variable vi, Variable vj) const;
  // Nonzero entries in both orientations, ordered by (vi, vj).
  const std::map<std::pair<Variable, Variable>, Scalar>& nonzero() const noexcept { return entries_; }
  // Upper triangle (index i < j in variables()) with nonzero entries.
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> upper_triangle() const;

  // Throws UnknownVariable unless every variable of p is listed.
  void require_known(const CommPoly& p) const;

  friend bool operator==(const PoissonTensor&, const PoissonTensor&) = default;

 private:
  Field field_;
  std::vector<Variable> vars_;
  std::map<std::pair<Variable, Variable>, Scalar> entries_;
};

// {a, b} = sum_{i,j} Pi^{ij} (da/dv_i)(db/dv_j).
CommPoly poisson_bracket(const CommPoly& a, const CommPoly& b, const PoissonTensor& pi);

// Truncated power series sum_{r=0}^{N} c_r h^r with polynomial coefficients.
class FormalSeries {
 public:
  FormalSeries(Field field, std::size_t order) : coeffs_(order + 1, CommPoly(field)) {}
  // p + 0*h + ... + 0*h^N.
  static FormalSeries lift(const CommPoly& p, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  Field field() const { return coeffs_.front().field(); }
  const CommPoly& operator[](std::size_t r) const { return coeffs_.at(r); }
  CommPoly& operator[](std::size_t r) { return coeffs_.at(r); }
  const std::vector<CommPoly>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const;

  FormalSeries operator-() const;
  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

  // "x*y + 1/2*h", with h^r for higher orders; "0" for zero.
  std::string to_string() const;

 private:
  std::vector<CommPoly> coeffs_;
};

using SeriesMatrix = Matrix<FormalSeries>;

// Moyal product data. Construction enforces that 2^r * r! is invertible for
// every r <= order (so order < p, and p != 2 once order >= 1).
class StarContext {
 public:
  StarContext(PoissonTensor tensor, std::size_t order);

  const PoissonTensor& tensor() const noexcept { return tensor_; }
  std::size_t order() const noexcept { return order_; }
  Field field() const noexcept { return tensor_.field(); }

 private:
  PoissonTensor tensor_;
  std::size_t order_;
};

// B_r(a, b) = 1/(2^r r!) sum Pi^{i1 j1}..Pi^{ir jr} (d_{i1..ir} a)(d_{j1..jr} b).
CommPoly moyal_term(const CommPoly& a, const CommPoly& b, std::size_t r, const PoissonTensor& pi);

FormalSeries star_mul(const FormalSeries& a, const FormalSeries& b, const StarContext& ctx);
FormalSeries star_commutator(const FormalSeries& a, const FormalSeries& b, const StarContext& ctx);

// True iff the h^1 coefficient of [a, b]_* equals {a, b}. Requires order >= 2.
struct CorrespondenceReport {
  CommPoly star_h1;
  CommPoly bracket;
  bool holds = false;
  friend bool operator==(const CorrespondenceReport&, const CorrespondenceReport&) = default;
};
CorrespondenceReport verify_correspondence(const CommPoly& a, const CommPoly& b, const StarContext& ctx);

enum class MatrixStarOp { Multiply, Commutator };
SeriesMatrix matrix_star(const SeriesMatrix& a, const SeriesMatrix& b, const StarContext& ctx, MatrixStarOp op);

// Entrywise lift A + 0*h + ... to the context order.
SeriesMatrix quantize_lift(const GenericMatrix& a, const StarContext& ctx);
SeriesMatrix quantize_lift(const PolyMatrix& a, const StarContext& ctx);

// Coefficient of h^r of every entry.
PolyMatrix series_coefficient(const SeriesMatrix& m, std::size_t r);

// Identity matrix of lifted constants at the context order.
SeriesMatrix series_identity(std::size_t n, const StarContext& ctx);

}  // namespace bergq
