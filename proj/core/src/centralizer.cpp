#include "bergq/centralizer.hpp"

#include <algorithm>

#include "bergq/error.hpp"
#include "bergq/linear_algebra.hpp"

namespace bergq {

namespace {

using WordVector = SparseVector<Word, WordGreater>;

WordVector to_vector(const FreePoly& p) { return WordVector(p.terms().begin(), p.terms().end()); }

FreePoly from_vector(const WordVector& v, Field field, std::size_t s) {
  FreePoly p(field, s);
  for (const auto& [w, c] : v) p.add_term(w, c);
  return p;
}

// All words of length exactly m over s letters, in increasing letter order.
std::vector<Word> words_of_length(std::size_t s, std::size_t m) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Word> next;
    next.reserve(out.size() * s);
    for (const auto& w : out) {
      for (std::uint32_t l = 1; l <= s; ++l) {
        Word x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::size_t degree_of(const FreePoly& p) { return p.degree().value_or(0); }

}  // namespace

std::vector<std::size_t> CentralizerBasis::dimensions() const {
  std::vector<std::size_t> out;
  for (const auto& k : kernels) out.push_back(k.size());
  return out;
}

CentralizerBasis centralizer_basis(const FreePoly& f, std::size_t d) {
  if (f.is_scalar()) raise(ErrorCode::ScalarInput, "centralizer of a scalar is the whole algebra");
  const Field field = f.field();
  const std::size_t s = f.generators();
  CentralizerBasis out{f, d, {}};

  // Column k is [f, words[k]]; every dependency among columns is a kernel
  // vector, and the dependencies found after inserting all words of length
  // <= m span K_m.
  IncrementalEchelon<Word, WordGreater> echelon(field);
  std::vector<Word> words;
  std::vector<WordVector> relations;
  for (std::size_t m = 0; m <= d; ++m) {
    for (auto& w : words_of_length(s, m)) {
      auto column = to_vector(commutator(f, FreePoly::monomial(field, s, w, Scalar::one(field))));
      words.push_back(std::move(w));
      if (auto rel = echelon.insert(std::move(column))) {
        WordVector g;
        for (const auto& [k, c] : *rel) g.emplace(words[k], c);
        relations.push_back(std::move(g));
      }
    }
    auto rows = reduced_row_echelon(relations);
    std::vector<FreePoly> basis;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) basis.push_back(from_vector(*it, field, s));
    out.kernels.push_back(std::move(basis));
  }
  return out;
}

BergmanReport bergman_check(const FreePoly& f, std::size_t d) {
  BergmanReport report{centralizer_basis(f, d), {}, std::nullopt, {}, {}, true, false, std::nullopt, {}};
  report.dimensions = report.basis.dimensions();
  const auto& top = report.basis.kernels.back();
  const Field field = f.field();
  const std::size_t s = f.generators();

  for (std::size_t i = 0; i < top.size() && report.basis_commutes; ++i) {
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      if (!commutator(top[i], top[j]).is_zero()) {
        report.basis_commutes = false;
        break;
      }
    }
  }

  std::optional<std::size_t> min_degree;
  for (const auto& g : top) {
    const std::size_t deg = degree_of(g);
    if (deg > 0 && (!min_degree || deg < *min_degree)) min_degree = deg;
  }
  if (!min_degree) {
    report.failure = "kernel contains only constants up to degree " + std::to_string(d);
    return report;
  }
  for (const auto& g : top) {
    if (degree_of(g) != *min_degree) continue;
    FreePoly h = g;
    h.add_term(Word{}, -h.constant_term());
    report.candidates.push_back(std::move(h));
  }

  std::optional<FreePoly> first_witness;
  for (const auto& h : report.candidates) {
    IncrementalEchelon<Word, WordGreater> span(field);
    FreePoly power = FreePoly::constant(field, s, Scalar::one(field));
    for (std::size_t j = 0; j * *min_degree <= d; ++j) {
      span.insert(to_vector(power));
      power = power * h;
    }
    std::optional<FreePoly> outside;
    for (const auto& g : top) {
      if (!span.reduce(to_vector(g)).empty()) {
        outside = g;
        break;
      }
    }
    if (outside) {
      if (!first_witness) first_witness = outside;
      continue;
    }
    std::vector<std::size_t> expected;
    for (std::size_t m = 0; m <= d; ++m) expected.push_back(m / *min_degree + 1);
    report.generator = h;
    report.expected_dimensions = expected;
    report.pass = expected == report.dimensions && report.basis_commutes;
    if (!report.pass) report.failure = "dimension table differs from the power count of the generator";
    return report;
  }
  report.witness = first_witness;
  report.failure = "centralizer element outside the power span of every candidate";
  return report;
}

std::string verdict_name(PipelineVerdict v) {
  switch (v) {
    case PipelineVerdict::NotCommuting: return "not-commuting";
    case PipelineVerdict::TrdegOne: return "trdeg-1";
    case PipelineVerdict::NoAnnihilatorStarNonzero: return "no-annihilator-star-nonzero";
    case PipelineVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

SizeResult analyse_pair(std::size_t n, const GenericMatrix& f, const GenericMatrix& g, AnnihilatorResult annihilator,
                        const StarContext& ctx) {
  const auto comm = matrix_star(quantize_lift(f, ctx), quantize_lift(g, ctx), ctx, MatrixStarOp::Commutator);
  SizeResult r{n, f, g, f * g == g * f, std::move(annihilator), series_coefficient(comm, 0),
               series_coefficient(comm, 1), false};
  r.star_vanishes = r.star_order0.is_zero() && r.star_order1.is_zero();
  return r;
}

PipelineVerdict classify(const std::vector<SizeResult>& sizes) {
  if (sizes.empty()) return PipelineVerdict::Inconclusive;
  if (std::all_of(sizes.begin(), sizes.end(), [](const SizeResult& r) { return r.annihilator.found; })) {
    return PipelineVerdict::TrdegOne;
  }
  for (const auto& r : sizes) {
    if (!r.annihilator.found && !r.star_vanishes) return PipelineVerdict::NoAnnihilatorStarNonzero;
  }
  return PipelineVerdict::Inconclusive;
}

}  // namespace

PipelineReport bergman_pipeline(const FreePoly& f, const FreePoly& g, std::size_t nmax, std::size_t dmax,
                                const StarContext& ctx) {
  if (nmax == 0) raise(ErrorCode::InvalidSize, "nmax must be at least 1");
  if (ctx.order() < 1) raise(ErrorCode::InvalidSize, "star commutator check needs truncation order >= 1");
  PipelineReport report;
  report.kind = PipelineReport::Kind::Pipeline;
  report.f = f;
  report.g = g;
  report.nmax = nmax;
  report.dmax = dmax;
  report.order = ctx.order();
  report.free_commute = commutator(f, g).is_zero();
  if (!report.free_commute) {
    report.verdict = PipelineVerdict::NotCommuting;
    return report;
  }
  std::vector<std::size_t> sizes;
  for (std::size_t n = 1; n <= nmax; ++n) sizes.push_back(n);
  const StabilityReport stability = annihilator_stability(f, g, sizes, dmax);
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    report.sizes.push_back(analyse_pair(sizes[k], pi_reduce(f, sizes[k]), pi_reduce(g, sizes[k]),
                                        stability.results[k], ctx));
  }
  report.stability_all_found = stability.all_found;
  report.stability_coincide = stability.coincide;
  report.verdict = classify(report.sizes);
  return report;
}

PipelineReport commuting_matrix_probe(const GenericMatrix& f, const GenericMatrix& g, std::size_t dmax,
                                      const StarContext& ctx) {
  if (ctx.order() < 1) raise(ErrorCode::InvalidSize, "star commutator check needs truncation order >= 1");
  PipelineReport report;
  report.kind = PipelineReport::Kind::Probe;
  report.nmax = f.size();
  report.dmax = dmax;
  report.order = ctx.order();
  report.free_commute = true;
  AnnihilatorResult ann = find_annihilator(f, g, dmax);  // throws NotCommuting
  report.sizes.push_back(analyse_pair(f.size(), f, g, ann, ctx));
  report.stability_all_found = ann.found;
  report.stability_coincide = ann.found;
  report.verdict = classify(report.sizes);
  return report;
}

std::string PipelineReport::verdict_line() const {
  switch (verdict) {
    case PipelineVerdict::NotCommuting:
      return "verdict: not commuting ([f, g] != 0 in the free algebra)";
    case PipelineVerdict::TrdegOne: {
      std::string line = "verdict: trdeg 1 (annihilator " + sizes.front().annihilator.polynomial.to_string();
      if (sizes.size() > 1) {
        line += stability_coincide ? " at every size" : ", differing across sizes";
      }
      return line + ")";
    }
    case PipelineVerdict::NoAnnihilatorStarNonzero:
      return "verdict: no annihilator up to degree " + std::to_string(dmax) +
             " and star commutator nonzero mod h^2";
    case PipelineVerdict::Inconclusive:
      break;
  }
  return "verdict: inconclusive";
}

}  // namespace bergq
