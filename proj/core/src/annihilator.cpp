#include "bergq/annihilator.hpp"

#include <map>
#include <utility>

#include "bergq/error.hpp"
#include "bergq/linear_algebra.hpp"

namespace bergq {

namespace {

using Exponents = std::pair<std::uint32_t, std::uint32_t>;

// Graded-lex with u > v, largest first.
struct ExponentsGreater {
  bool operator()(const Exponents& x, const Exponents& y) const {
    auto dx = x.first + x.second;
    auto dy = y.first + y.second;
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  }
};

// Coordinates of a polynomial matrix: (entry index, monomial).
struct FlatKey {
  std::size_t entry;
  CommMonomial monomial;
};

struct FlatKeyLess {
  bool operator()(const FlatKey& a, const FlatKey& b) const {
    if (a.entry != b.entry) return a.entry < b.entry;
    return grlex_compare(a.monomial, b.monomial) > 0;
  }
};

using FlatVector = SparseVector<FlatKey, FlatKeyLess>;

FlatVector flatten(const GenericMatrix& m) {
  FlatVector out;
  const auto& entries = m.entries().entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    for (const auto& [mono, c] : entries[k].terms()) out.emplace_hint(out.end(), FlatKey{k, mono}, c);
  }
  return out;
}

}  // namespace

BivariatePoly::BivariatePoly(CommPoly p) : p_(std::move(p)) {
  for (const auto& var : p_.variables()) {
    if (var != u() && var != v()) raise(ErrorCode::UnknownVariable, var.to_string() + " in bivariate polynomial");
  }
}

BivariatePoly BivariatePoly::parse(std::string_view text, Field field) {
  return BivariatePoly(CommPoly::parse(text, field));
}

void BivariatePoly::add_term(std::uint32_t a, std::uint32_t b, const Scalar& c) {
  p_.add_term(CommMonomial(u(), a) * CommMonomial(v(), b), c);
}

Scalar BivariatePoly::coefficient(std::uint32_t a, std::uint32_t b) const {
  return p_.coefficient(CommMonomial(u(), a) * CommMonomial(v(), b));
}

GenericMatrix BivariatePoly::evaluate(const GenericMatrix& f, const GenericMatrix& g) const {
  if (f.size() != g.size()) raise(ErrorCode::ShapeMismatch, "annihilator evaluation on different sizes");
  GenericMatrix acc = GenericMatrix::zero(f.size(), f.field());
  std::map<std::uint32_t, GenericMatrix> fpow, gpow;
  auto power = [](std::map<std::uint32_t, GenericMatrix>& cache, const GenericMatrix& base, std::uint32_t e) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    GenericMatrix r = GenericMatrix::identity(base.size(), base.field());
    for (std::uint32_t k = 0; k < e; ++k) r = r * base;
    cache.emplace(e, r);
    return r;
  };
  for (const auto& [mono, c] : p_.terms()) {
    GenericMatrix term = power(fpow, f, mono.exponent(u())) * power(gpow, g, mono.exponent(v()));
    acc = acc + GenericMatrix(term.entries().map([&](const CommPoly& x) { return x.scaled(c); }));
  }
  return acc;
}

AnnihilatorResult find_annihilator(const GenericMatrix& f, const GenericMatrix& g, std::size_t dmax) {
  if (f.size() != g.size()) raise(ErrorCode::ShapeMismatch, "annihilator inputs differ in size");
  if (f.field() != g.field()) raise(ErrorCode::FieldMismatch, "annihilator inputs differ in field");
  if (!(f * g == g * f)) raise(ErrorCode::NotCommuting, "F^a G^b is ambiguous for non-commuting inputs");
  const Field field = f.field();

  AnnihilatorResult result;
  result.polynomial = BivariatePoly(field);
  result.matrix_size = f.size();

  IncrementalEchelon<FlatKey, FlatKeyLess> echelon(field);
  std::vector<Exponents> labels;
  std::map<Exponents, GenericMatrix> previous;  // powers of degree D-1
  for (std::size_t d = 0; d <= dmax; ++d) {
    std::map<Exponents, GenericMatrix> current;
    std::vector<IncrementalEchelon<FlatKey, FlatKeyLess>::Relation> relations;
    for (std::uint32_t a = static_cast<std::uint32_t>(d) + 1; a-- > 0;) {
      const std::uint32_t b = static_cast<std::uint32_t>(d) - a;
      GenericMatrix m = d == 0 ? GenericMatrix::identity(f.size(), field)
                        : a > 0 ? previous.at({a - 1, b}) * f
                                : previous.at({a, b - 1}) * g;
      labels.emplace_back(a, b);
      if (auto relation = echelon.insert(flatten(m))) relations.push_back(std::move(*relation));
      current.emplace(Exponents{a, b}, std::move(m));
    }
    previous = std::move(current);
    result.searched_bound = d;
    if (relations.empty()) continue;

    std::vector<SparseVector<Exponents, ExponentsGreater>> kernel;
    for (const auto& relation : relations) {
      SparseVector<Exponents, ExponentsGreater> row;
      for (const auto& [label, c] : relation) row.emplace(labels[label], c);
      kernel.push_back(std::move(row));
    }
    auto reduced = reduced_row_echelon(kernel);
    for (const auto& [e, c] : reduced.front()) result.polynomial.add_term(e.first, e.second, c);
    result.found = true;
    result.degree = d;
    result.kernel_dimension = reduced.size();
    if (!result.polynomial.evaluate(f, g).is_zero()) {
      raise(ErrorCode::InvalidReport, "internal: annihilator does not vanish");
    }
    return result;
  }
  return result;
}

StabilityReport annihilator_stability(const FreePoly& f, const FreePoly& g, const std::vector<std::size_t>& sizes,
                                      std::size_t dmax) {
  if (!commutator(f, g).is_zero()) raise(ErrorCode::NotCommuting, "[f, g] != 0 in the free algebra");
  StabilityReport report;
  report.sizes = sizes;
  for (std::size_t n : sizes) report.results.push_back(find_annihilator(pi_reduce(f, n), pi_reduce(g, n), dmax));
  report.all_found = !report.results.empty();
  for (const auto& r : report.results) report.all_found = report.all_found && r.found;
  report.coincide = report.all_found;
  for (const auto& r : report.results) {
    report.coincide = report.coincide && r.polynomial == report.results.front().polynomial;
  }
  return report;
}

}  // namespace bergq
