#include "bergq/quantization.hpp"

#include <algorithm>

#include "bergq/error.hpp"

namespace bergq {

// ---------------------------------------------------------------------------
// PoissonTensor

PoissonTensor::PoissonTensor(Field field, std::vector<Variable> variables) : field_(field), vars_(std::move(variables)) {
  auto sorted = vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    raise(ErrorCode::InvalidTensor, "repeated variable in Poisson tensor");
  }
}

PoissonTensor PoissonTensor::pairing(Field field, std::vector<Variable> variables) {
  PoissonTensor t(field, std::move(variables));
  for (const auto& v : t.vars_) {
    Variable partner = v;
    if (v.kind() == Variable::Kind::MatrixEntry) {
      if (v.generator() != 1) continue;
      partner = Variable::entry(2, v.row(), v.col());
    } else {
      if (v.name() != "x") continue;
      partner = Variable::aux("y", v.index());
    }
    if (t.contains(partner)) t.set(v, partner, Scalar::one(field));
  }
  return t;
}

bool PoissonTensor::contains(Variable v) const {
  return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
}

void PoissonTensor::set(Variable vi, Variable vj, const Scalar& c) {
  if (!contains(vi)) raise(ErrorCode::UnknownVariable, vi.to_string() + " is not in the tensor's variable list");
  if (!contains(vj)) raise(ErrorCode::UnknownVariable, vj.to_string() + " is not in the tensor's variable list");
  if (c.field() != field_) raise(ErrorCode::FieldMismatch, "tensor entry over " + c.field().to_string());
  if (vi == vj) {
    if (!c.is_zero()) raise(ErrorCode::InvalidTensor, "diagonal entry {v, v} must vanish");
    return;
  }
  entries_.erase({vi, vj});
  entries_.erase({vj, vi});
  if (c.is_zero()) return;
  entries_.emplace(std::pair{vi, vj}, c);
  entries_.emplace(std::pair{vj, vi}, -c);
}

Scalar PoissonTensor::entry(Variable vi, Variable vj) const {
  auto it = entries_.find({vi, vj});
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

std::vector<std::tuple<std::size_t, std::size_t, Scalar>> PoissonTensor::upper_triangle() const {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      Scalar c = entry(vars_[i], vars_[j]);
      if (!c.is_zero()) out.emplace_back(i, j, c);
    }
  }
  return out;
}

void PoissonTensor::require_known(const CommPoly& p) const {
  if (p.field() != field_) raise(ErrorCode::FieldMismatch, "polynomial over " + p.field().to_string() +
                                                                ", tensor over " + field_.to_string());
  for (const auto& v : p.variables()) {
    if (!contains(v)) raise(ErrorCode::UnknownVariable, v.to_string() + " is not in the tensor's variable list");
  }
}

CommPoly poisson_bracket(const CommPoly& a, const CommPoly& b, const PoissonTensor& pi) {
  pi.require_known(a);
  pi.require_known(b);
  CommPoly out(pi.field());
  for (const auto& [ij, c] : pi.nonzero()) {
    CommPoly da = partial_derivative(a, ij.first);
    if (da.is_zero()) continue;
    CommPoly db = partial_derivative(b, ij.second);
    if (db.is_zero()) continue;
    out += (da * db).scaled(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FormalSeries

FormalSeries FormalSeries::lift(const CommPoly& p, std::size_t order) {
  FormalSeries s(p.field(), order);
  s.coeffs_[0] = p;
  return s;
}

bool FormalSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CommPoly& c) { return c.is_zero(); });
}

FormalSeries FormalSeries::operator-() const {
  FormalSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {

void check_series(const FormalSeries& a, const FormalSeries& b) {
  if (a.order() != b.order()) {
    raise(ErrorCode::ShapeMismatch, "series truncated at orders " + std::to_string(a.order()) + " and " +
                                        std::to_string(b.order()));
  }
}

}  // namespace

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
  check_series(a, b);
  FormalSeries out = a;
  for (std::size_t r = 0; r <= a.order(); ++r) out.coeffs_[r] += b.coeffs_[r];
  return out;
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
  check_series(a, b);
  FormalSeries out = a;
  for (std::size_t r = 0; r <= a.order(); ++r) out.coeffs_[r] -= b.coeffs_[r];
  return out;
}

std::string FormalSeries::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < coeffs_.size(); ++r) {
    const auto& c = coeffs_[r];
    if (c.is_zero()) continue;
    bool negative = false;
    std::string body = c.to_string();
    if (r > 0) {
      std::string h = r == 1 ? "h" : "h^" + std::to_string(r);
      if (c.is_constant()) {
        Scalar k = c.constant_term();
        negative = k.prints_negative();
        if (negative) k = -k;
        body = k.is_one() ? h : k.to_string() + "*" + h;
      } else {
        body = "(" + body + ")*" + h;
      }
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Star product

StarContext::StarContext(PoissonTensor tensor, std::size_t order) : tensor_(std::move(tensor)), order_(order) {
  const auto p = tensor_.field().characteristic();
  if (p != 0 && (order_ >= p || (order_ >= 1 && p == 2))) {
    raise(ErrorCode::CharacteristicTooSmall, "star product to order " + std::to_string(order_) +
                                                 " divides by 2^r r! (r <= order) but char = " + std::to_string(p));
  }
}

CommPoly moyal_term(const CommPoly& a, const CommPoly& b, std::size_t r, const PoissonTensor& pi) {
  const Field field = pi.field();
  // Apply the bidifferential operator sum Pi^{ij} d_i (x) d_j r times to a (x) b.
  struct Tensor {
    CommPoly left;
    CommPoly right;
    Scalar coeff;
  };
  std::vector<Tensor> current{{a, b, Scalar::one(field)}};
  for (std::size_t step = 0; step < r && !current.empty(); ++step) {
    std::vector<Tensor> next;
    for (const auto& t : current) {
      for (const auto& [ij, c] : pi.nonzero()) {
        CommPoly dl = partial_derivative(t.left, ij.first);
        if (dl.is_zero()) continue;
        CommPoly dr = partial_derivative(t.right, ij.second);
        if (dr.is_zero()) continue;
        next.push_back({std::move(dl), std::move(dr), t.coeff * c});
      }
    }
    current = std::move(next);
  }
  CommPoly sum(field);
  for (const auto& t : current) sum += (t.left * t.right).scaled(t.coeff);
  // 1 / (2^r r!)
  Scalar norm = Scalar::one(field);
  for (std::size_t k = 1; k <= r; ++k) norm *= Scalar(field, static_cast<long>(2 * k));
  return sum.scaled(norm.inverse());
}

FormalSeries star_mul(const FormalSeries& a, const FormalSeries& b, const StarContext& ctx) {
  const std::size_t n = ctx.order();
  if (a.order() != n || b.order() != n) {
    raise(ErrorCode::ShapeMismatch, "series order differs from the star context order " + std::to_string(n));
  }
  for (std::size_t r = 0; r <= n; ++r) {
    ctx.tensor().require_known(a[r]);
    ctx.tensor().require_known(b[r]);
  }
  FormalSeries out(ctx.field(), n);
  for (std::size_t p = 0; p <= n; ++p) {
    if (a[p].is_zero()) continue;
    for (std::size_t q = 0; p + q <= n; ++q) {
      if (b[q].is_zero()) continue;
      for (std::size_t r = 0; p + q + r <= n; ++r) out[p + q + r] += moyal_term(a[p], b[q], r, ctx.tensor());
    }
  }
  return out;
}

FormalSeries star_commutator(const FormalSeries& a, const FormalSeries& b, const StarContext& ctx) {
  return star_mul(a, b, ctx) - star_mul(b, a, ctx);
}

CorrespondenceReport verify_correspondence(const CommPoly& a, const CommPoly& b, const StarContext& ctx) {
  if (ctx.order() < 2) raise(ErrorCode::InvalidSize, "correspondence check needs truncation order >= 2");
  auto comm = star_commutator(FormalSeries::lift(a, ctx.order()), FormalSeries::lift(b, ctx.order()), ctx);
  CorrespondenceReport report{comm[1], poisson_bracket(a, b, ctx.tensor()), false};
  report.holds = comm[0].is_zero() && report.star_h1 == report.bracket;
  return report;
}

SeriesMatrix matrix_star(const SeriesMatrix& a, const SeriesMatrix& b, const StarContext& ctx, MatrixStarOp op) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    raise(ErrorCode::ShapeMismatch, "star product of " + a.shape() + " and " + b.shape());
  }
  auto mul = [&ctx](const FormalSeries& x, const FormalSeries& y) { return star_mul(x, y, ctx); };
  SeriesMatrix ab = SeriesMatrix::multiply(a, b, mul);
  if (op == MatrixStarOp::Multiply) return ab;
  return ab - SeriesMatrix::multiply(b, a, mul);
}

SeriesMatrix quantize_lift(const PolyMatrix& a, const StarContext& ctx) {
  return a.map([&ctx](const CommPoly& p) {
    ctx.tensor().require_known(p);
    return FormalSeries::lift(p, ctx.order());
  });
}

SeriesMatrix quantize_lift(const GenericMatrix& a, const StarContext& ctx) { return quantize_lift(a.entries(), ctx); }

PolyMatrix series_coefficient(const SeriesMatrix& m, std::size_t r) {
  return m.map([r](const FormalSeries& s) { return s[r]; });
}

SeriesMatrix series_identity(std::size_t n, const StarContext& ctx) {
  FormalSeries zero(ctx.field(), ctx.order());
  return SeriesMatrix::identity(n, zero, FormalSeries::lift(CommPoly(Scalar::one(ctx.field())), ctx.order()));
}

}  // namespace bergq
