#include "bergq/diagonalization.hpp"

namespace bergq {

namespace {

SeriesMatrix diagonal_part(const SeriesMatrix& m) {
  SeriesMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j) out(i, j) = m(i, j) - m(i, j);
    }
  }
  return out;
}

}  // namespace

DiagonalBracketReport eq1_diagonal_check(const SeriesMatrix& f, const SeriesMatrix& g, const StarContext& ctx) {
  if (ctx.order() < 1) raise(ErrorCode::InvalidSize, "bracket check needs truncation order >= 1");
  if (!f.is_square() || f.shape() != g.shape()) raise(ErrorCode::ShapeMismatch, "operands " + f.shape() + " and " + g.shape());
  const PolyMatrix f0 = series_coefficient(f, 0);
  const PolyMatrix g0 = series_coefficient(g, 0);
  if (!f0.is_diagonal() || !g0.is_diagonal()) {
    raise(ErrorCode::NotDiagonalLeadingTerm, "order-0 coefficients must be diagonal");
  }
  const SeriesMatrix full = matrix_star(f, g, ctx, MatrixStarOp::Commutator);
  const SeriesMatrix diag_only = matrix_star(diagonal_part(f), diagonal_part(g), ctx, MatrixStarOp::Commutator);

  DiagonalBracketReport report{series_coefficient(full, 0), series_coefficient(full, 1), {}, {}, {}, true, true, false};
  const PolyMatrix rest = report.order1 - series_coefficient(diag_only, 1);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    report.diagonal.push_back(report.order1(i, i));
    report.brackets.push_back(poisson_bracket(f0(i, i), g0(i, i), ctx.tensor()));
    const bool eq = report.diagonal.back() == report.brackets.back();
    report.entry_equal.push_back(eq);
    report.all_equal = report.all_equal && eq;
    report.nonvanishing = report.nonvanishing || !report.diagonal.back().is_zero();
    report.off_diagonal_contributions_traceless = report.off_diagonal_contributions_traceless && rest(i, i).is_zero();
  }
  return report;
}

}  // namespace bergq
