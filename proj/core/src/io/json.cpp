#include "bergq/io/json.hpp"

#include <fstream>

#include "bergq/error.hpp"
#include "bergq/version.hpp"

namespace bergq::io {

namespace {

[[noreturn]] void invalid(const std::string& what) { raise(ErrorCode::InvalidReport, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) invalid(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return member(j, key).get<T>();
  } catch (const json::exception& e) {
    invalid(std::string("field \"") + key + "\": " + e.what());
  }
}

std::string text(const json& j) {
  if (!j.is_string()) invalid("expected a string, got " + j.dump());
  return j.get<std::string>();
}

void require(bool claim, const std::string& what) {
  if (!claim) invalid("stored claim does not re-verify: " + what);
}

template <class T, class Fn>
json array_of(const std::vector<T>& xs, Fn fn) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(fn(x));
  return out;
}

template <class Fn>
auto vector_from(const json& j, Fn fn) {
  if (!j.is_array()) invalid("expected an array, got " + j.dump());
  std::vector<decltype(fn(j))> out;
  for (const auto& x : j) out.push_back(fn(x));
  return out;
}

// Entries of any exact field rendered through a per-entry encoder.
template <class T, class Enc>
json matrix_json(const Matrix<T>& m, Enc enc) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(enc(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T, class Dec>
Matrix<T> matrix_from(const json& j, Dec dec) {
  if (!j.is_array() || j.empty()) invalid("expected a non-empty matrix");
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) invalid("matrix rows must be non-empty arrays");
  std::vector<T> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) invalid("ragged matrix");
    for (const auto& x : row) entries.push_back(dec(x));
  }
  Matrix<T> m(rows, cols, entries.front());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = entries[i * cols + c];
  }
  return m;
}

json context_json(const StarContext& ctx) { return {{"tensor", to_json(ctx.tensor())}, {"order", ctx.order()}}; }

StarContext context_from_json(const json& j, Field field) {
  return StarContext(poisson_from_json(member(j, "tensor"), field), get<std::size_t>(j, "order"));
}

json size_result_json(const SizeResult& r) {
  return {{"n", r.n},
          {"f_image", to_json(r.f_image)},
          {"g_image", to_json(r.g_image)},
          {"images_commute", r.images_commute},
          {"annihilator", to_json(r.annihilator)},
          {"star_order0", to_json(r.star_order0)},
          {"star_order1", to_json(r.star_order1)},
          {"star_vanishes", r.star_vanishes}};
}

SizeResult size_result_from(const json& j, Field field) {
  return {get<std::size_t>(j, "n"),
          generic_from_json(member(j, "f_image"), field),
          generic_from_json(member(j, "g_image"), field),
          get<bool>(j, "images_commute"),
          annihilator_from_json(member(j, "annihilator"), field),
          poly_matrix_from_json(member(j, "star_order0"), field),
          poly_matrix_from_json(member(j, "star_order1"), field),
          get<bool>(j, "star_vanishes")};
}

PipelineVerdict verdict_from(const std::string& name) {
  for (auto v : {PipelineVerdict::NotCommuting, PipelineVerdict::TrdegOne, PipelineVerdict::NoAnnihilatorStarNonzero,
                 PipelineVerdict::Inconclusive}) {
    if (verdict_name(v) == name) return v;
  }
  invalid("unknown verdict \"" + name + "\"");
}

// Field elements of diagonalization runs.
json element_json(const Scalar& c) { return to_json(c); }
json element_json(const RationalFunction& r) { return to_json(r); }

template <class F>
F element_from(const json& j, Field field);
template <>
Scalar element_from<Scalar>(const json& j, Field field) {
  return scalar_from_json(j, field);
}
template <>
RationalFunction element_from<RationalFunction>(const json& j, Field field) {
  return rational_from_json(j, field);
}

template <class F>
json field_series_json(const FieldSeriesMatrix<F>& m) {
  json out = json::array();
  for (std::size_t r = 0; r <= m.order(); ++r) {
    out.push_back(matrix_json(m[r], [](const F& x) { return element_json(x); }));
  }
  return out;
}

template <class F>
FieldSeriesMatrix<F> field_series_from(const json& j, Field field) {
  return FieldSeriesMatrix<F>(
      vector_from(j, [field](const json& m) { return matrix_from<F>(m, [field](const json& x) { return element_from<F>(x, field); }); }));
}

template <class F>
json diagonalization_json(const DiagonalizationRun<F>& run) {
  const auto& r = run.report;
  json out = {{"input", field_series_json(run.input)},
              {"target", run.target},
              {"conjugator", field_series_json(r.conjugator)},
              {"conjugator_inverse", field_series_json(r.conjugator_inverse)},
              {"diagonal", field_series_json(r.diagonal)},
              {"achieved_order", r.achieved_order},
              {"eigenvalues", array_of(r.eigenvalues, [](const F& x) { return element_json(x); })},
              {"verified", r.verified}};
  if (run.companion) {
    out["companion"] = field_series_json(*run.companion);
    out["companion_conjugate"] = field_series_json(*r.companion_conjugate);
    out["companion_eigenvalues"] = array_of(r.companion_eigenvalues, [](const F& x) { return element_json(x); });
    out["companion_diagonal"] = r.companion_diagonal;
  }
  return out;
}

template <class F>
DiagonalizationRun<F> diagonalization_from(const json& j, Field field) {
  auto input = field_series_from<F>(member(j, "input"), field);
  std::optional<FieldSeriesMatrix<F>> companion;
  if (j.contains("companion")) companion = field_series_from<F>(j.at("companion"), field);
  const auto target = get<std::size_t>(j, "target");
  auto eigen = [field](const json& x) { return element_from<F>(x, field); };
  DiagonalReport<F> stored{field_series_from<F>(member(j, "conjugator"), field),
                           field_series_from<F>(member(j, "conjugator_inverse"), field),
                           field_series_from<F>(member(j, "diagonal"), field),
                           get<std::size_t>(j, "achieved_order"),
                           vector_from(member(j, "eigenvalues"), eigen),
                           std::nullopt,
                           {},
                           false,
                           get<bool>(j, "verified")};
  if (companion) {
    stored.companion_conjugate = field_series_from<F>(member(j, "companion_conjugate"), field);
    stored.companion_eigenvalues = vector_from(member(j, "companion_eigenvalues"), eigen);
    stored.companion_diagonal = get<bool>(j, "companion_diagonal");
  }
  auto recomputed = successive_diagonalize(input, target, companion ? &*companion : nullptr);
  require(recomputed == stored, "diagonalization differs from recomputation");
  return {std::move(input), std::move(companion), target, std::move(stored)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Values

json to_json(const Scalar& c) { return c.to_string(); }
Scalar scalar_from_json(const json& j, Field field) { return Scalar::parse(field, text(j)); }

json to_json(const CommPoly& p) { return p.to_string(); }
CommPoly poly_from_json(const json& j, Field field) { return CommPoly::parse(text(j), field); }

json to_json(const RationalFunction& r) {
  return {{"num", to_json(r.numerator())}, {"den", to_json(r.denominator())}};
}

RationalFunction rational_from_json(const json& j, Field field) {
  RationalFunction r(poly_from_json(member(j, "num"), field), poly_from_json(member(j, "den"), field));
  require(r.numerator() == poly_from_json(j.at("num"), field) && r.denominator() == poly_from_json(j.at("den"), field),
          "rational function is not in canonical form");
  return r;
}

json to_json(const FreePoly& p) { return p.to_string(); }
FreePoly free_from_json(const json& j, std::size_t generators, Field field) {
  return FreePoly::parse(text(j), generators, field);
}

json to_json(const PolyMatrix& m) {
  return matrix_json(m, [](const CommPoly& p) { return to_json(p); });
}
PolyMatrix poly_matrix_from_json(const json& j, Field field) {
  return matrix_from<CommPoly>(j, [field](const json& x) { return poly_from_json(x, field); });
}

json to_json(const GenericMatrix& m) { return {{"origin", m.origin()}, {"entries", to_json(m.entries())}}; }
GenericMatrix generic_from_json(const json& j, Field field) {
  return GenericMatrix(poly_matrix_from_json(member(j, "entries"), field), get<unsigned>(j, "origin"));
}

json to_json(const SeriesMatrix& m) {
  json out = json::array();
  const std::size_t order = m.entries().front().order();
  for (std::size_t r = 0; r <= order; ++r) out.push_back(to_json(series_coefficient(m, r)));
  return out;
}

SeriesMatrix series_matrix_from_json(const json& j, Field field) {
  auto coeffs = vector_from(j, [field](const json& m) { return poly_matrix_from_json(m, field); });
  if (coeffs.empty()) invalid("series matrix needs at least one coefficient");
  const std::size_t order = coeffs.size() - 1;
  SeriesMatrix out(coeffs[0].rows(), coeffs[0].cols(), FormalSeries(field, order));
  for (std::size_t r = 0; r <= order; ++r) {
    if (coeffs[r].shape() != coeffs[0].shape()) invalid("series coefficients differ in shape");
    for (std::size_t i = 0; i < out.rows(); ++i) {
      for (std::size_t c = 0; c < out.cols(); ++c) out(i, c)[r] = coeffs[r](i, c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Poisson tensors

json to_json(const PoissonTensor& t) {
  json vars = json::array();
  for (const auto& v : t.variables()) vars.push_back(v.to_string());
  json entries = json::array();
  for (const auto& [i, j, c] : t.upper_triangle()) entries.push_back(json::array({i, j, c.to_string()}));
  return {{"variables", vars}, {"entries", entries}};
}

PoissonTensor poisson_from_json(const json& j, Field field) {
  auto vars = vector_from(member(j, "variables"), [](const json& x) { return Variable::parse(text(x)); });
  PoissonTensor t(field, vars);
  const auto& entries = member(j, "entries");
  if (!entries.is_array()) invalid("\"entries\" must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      raise(ErrorCode::InvalidTensor, "entry must be [i, j, \"scalar\"] with 0-based indices: " + e.dump());
    }
    const auto i = e[0].get<std::size_t>();
    const auto k = e[1].get<std::size_t>();
    if (i >= vars.size() || k >= vars.size()) raise(ErrorCode::InvalidTensor, "index out of range: " + e.dump());
    if (i >= k) raise(ErrorCode::InvalidTensor, "only upper-triangle entries (i < j) are allowed: " + e.dump());
    if (!t.entry(vars[i], vars[k]).is_zero()) raise(ErrorCode::InvalidTensor, "duplicate entry: " + e.dump());
    t.set(vars[i], vars[k], Scalar::parse(field, text(e[2])));
  }
  for (const auto& a : vars) {
    if (!t.entry(a, a).is_zero()) raise(ErrorCode::InvalidTensor, "nonzero diagonal");
    for (const auto& b : vars) {
      if (t.entry(a, b) != -t.entry(b, a)) raise(ErrorCode::InvalidTensor, "tensor is not antisymmetric");
    }
  }
  return t;
}

PoissonTensor load_poisson_file(const std::filesystem::path& path, Field field) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::InvalidTensor, "cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    raise(ErrorCode::InvalidTensor, path.string() + ": " + e.what());
  }
  try {
    return poisson_from_json(j, field);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidReport) raise(ErrorCode::InvalidTensor, e.what());
    throw;
  }
}

// ---------------------------------------------------------------------------
// Annihilators

json to_json(const AnnihilatorResult& r) {
  json out = {{"found", r.found}};
  if (r.found) {
    out["polynomial"] = r.polynomial.to_string();
    out["degree"] = r.degree;
    out["kernel_dimension"] = r.kernel_dimension;
  }
  out["matrix_size"] = r.matrix_size;
  out["searched_bound"] = r.searched_bound;
  return out;
}

AnnihilatorResult annihilator_from_json(const json& j, Field field) {
  AnnihilatorResult r;
  r.found = get<bool>(j, "found");
  r.searched_bound = get<std::size_t>(j, "searched_bound");
  r.matrix_size = get<std::size_t>(j, "matrix_size");
  r.polynomial = BivariatePoly(field);
  if (r.found) {
    r.polynomial = BivariatePoly::parse(text(member(j, "polynomial")), field);
    r.degree = get<std::size_t>(j, "degree");
    r.kernel_dimension = get<std::size_t>(j, "kernel_dimension");
    require(!r.polynomial.is_zero() && r.polynomial.total_degree() == static_cast<long>(r.degree),
            "annihilator degree");
    require(r.polynomial.poly().leading_coefficient().is_one(), "annihilator is normalized");
    require(r.degree == r.searched_bound, "search stops at the minimal degree");
  }
  return r;
}

void verify_annihilator(const AnnihilatorResult& r, const GenericMatrix& f, const GenericMatrix& g) {
  if (r.found) require(r.polynomial.evaluate(f, g).is_zero(), "P(F, G) = 0");
  require(find_annihilator(f, g, r.searched_bound) == r, "annihilator differs from recomputation");
}

json to_json(const StabilityReport& r) {
  json results = json::array();
  for (std::size_t k = 0; k < r.sizes.size(); ++k) {
    json x = to_json(r.results[k]);
    results.push_back(std::move(x));
  }
  return {{"sizes", r.sizes}, {"results", results}, {"all_found", r.all_found}, {"coincide", r.coincide}};
}

StabilityReport stability_from_json(const json& j, Field field) {
  StabilityReport r;
  r.sizes = get<std::vector<std::size_t>>(j, "sizes");
  r.results = vector_from(member(j, "results"), [field](const json& x) { return annihilator_from_json(x, field); });
  r.all_found = get<bool>(j, "all_found");
  r.coincide = get<bool>(j, "coincide");
  require(r.sizes.size() == r.results.size(), "one result per size");
  bool all = !r.results.empty();
  bool same = true;
  for (const auto& x : r.results) {
    all = all && x.found;
    same = same && x.found && x.polynomial == r.results.front().polynomial;
  }
  require(r.all_found == all, "all_found flag");
  require(r.coincide == (all && same), "coincide flag");
  for (std::size_t k = 0; k < r.sizes.size(); ++k) {
    require(r.results[k].matrix_size == r.sizes[k], "matrix size per result");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Standard identity

json to_json(const AmitsurLevitzkiReport& r) {
  return {{"n", r.n},
          {"identity_value", to_json(r.identity_value)},
          {"identity_vanishes", r.identity_vanishes},
          {"witness_arguments", array_of(r.witness_arguments, [](const GenericMatrix& m) { return to_json(m); })},
          {"witness_value", to_json(r.witness_value)},
          {"witness_nonzero", r.witness_nonzero}};
}

AmitsurLevitzkiReport amitsur_levitzki_from_json(const json& j, Field field) {
  AmitsurLevitzkiReport r{get<std::size_t>(j, "n"),
                          generic_from_json(member(j, "identity_value"), field),
                          vector_from(member(j, "witness_arguments"),
                                      [field](const json& x) { return generic_from_json(x, field); }),
                          generic_from_json(member(j, "witness_value"), field),
                          get<bool>(j, "identity_vanishes"),
                          get<bool>(j, "witness_nonzero")};
  require(amitsur_levitzki_check(r.n, field) == r, "standard identity report differs from recomputation");
  return r;
}

// ---------------------------------------------------------------------------
// Centralizers

json to_json(const CentralizerBasis& b) {
  json kernels = json::array();
  for (const auto& k : b.kernels) kernels.push_back(array_of(k, [](const FreePoly& p) { return to_json(p); }));
  return {{"f", to_json(b.f)},
          {"generators", b.f.generators()},
          {"bound", b.bound},
          {"dimensions", b.dimensions()},
          {"kernels", kernels}};
}

CentralizerBasis centralizer_from_json(const json& j, Field field) {
  const auto s = get<std::size_t>(j, "generators");
  CentralizerBasis b{free_from_json(member(j, "f"), s, field), get<std::size_t>(j, "bound"), {}};
  for (const auto& k : member(j, "kernels")) {
    b.kernels.push_back(vector_from(k, [s, field](const json& x) { return free_from_json(x, s, field); }));
  }
  require(get<std::vector<std::size_t>>(j, "dimensions") == b.dimensions(), "dimension table");
  for (const auto& k : b.kernels) {
    for (const auto& g : k) require(commutator(b.f, g).is_zero(), "[f, g] = 0 for " + g.to_string());
  }
  require(centralizer_basis(b.f, b.bound) == b, "centralizer basis differs from recomputation");
  return b;
}

json to_json(const BergmanReport& r) {
  json out = {{"pass", r.pass},
              {"generator", r.generator ? to_json(*r.generator) : json()},
              {"candidates", array_of(r.candidates, [](const FreePoly& p) { return to_json(p); })},
              {"dimensions", r.dimensions},
              {"expected_dimensions", r.expected_dimensions},
              {"basis_commutes", r.basis_commutes},
              {"witness", r.witness ? to_json(*r.witness) : json()},
              {"failure", r.failure},
              {"basis", to_json(r.basis)}};
  return out;
}

BergmanReport bergman_from_json(const json& j, Field field) {
  CentralizerBasis basis = centralizer_from_json(member(j, "basis"), field);
  const std::size_t s = basis.f.generators();
  auto opt_free = [&](const char* key) -> std::optional<FreePoly> {
    const auto& x = member(j, key);
    if (x.is_null()) return std::nullopt;
    return free_from_json(x, s, field);
  };
  BergmanReport r{std::move(basis),
                  vector_from(member(j, "candidates"), [&](const json& x) { return free_from_json(x, s, field); }),
                  opt_free("generator"),
                  get<std::vector<std::size_t>>(j, "dimensions"),
                  get<std::vector<std::size_t>>(j, "expected_dimensions"),
                  get<bool>(j, "basis_commutes"),
                  get<bool>(j, "pass"),
                  opt_free("witness"),
                  get<std::string>(j, "failure")};
  require(bergman_check(r.basis.f, r.basis.bound) == r, "centralizer check differs from recomputation");
  return r;
}

// ---------------------------------------------------------------------------
// Quantization

json to_json(const CorrespondenceReport& r, const CommPoly& a, const CommPoly& b, const StarContext& ctx) {
  return {{"a", to_json(a)},
          {"b", to_json(b)},
          {"context", context_json(ctx)},
          {"star_h1", to_json(r.star_h1)},
          {"bracket", to_json(r.bracket)},
          {"holds", r.holds}};
}

CorrespondenceReport correspondence_from_json(const json& j, Field field) {
  const StarContext ctx = context_from_json(member(j, "context"), field);
  CorrespondenceReport r{poly_from_json(member(j, "star_h1"), field), poly_from_json(member(j, "bracket"), field),
                         get<bool>(j, "holds")};
  const auto recomputed =
      verify_correspondence(poly_from_json(member(j, "a"), field), poly_from_json(member(j, "b"), field), ctx);
  require(recomputed == r, "correspondence differs from recomputation");
  return r;
}

json to_json(const DiagonalBracketReport& r, const SeriesMatrix& f, const SeriesMatrix& g, const StarContext& ctx) {
  return {{"f", to_json(f)},
          {"g", to_json(g)},
          {"context", context_json(ctx)},
          {"order0", to_json(r.order0)},
          {"order1", to_json(r.order1)},
          {"diagonal", array_of(r.diagonal, [](const CommPoly& p) { return to_json(p); })},
          {"brackets", array_of(r.brackets, [](const CommPoly& p) { return to_json(p); })},
          {"entry_equal", r.entry_equal},
          {"off_diagonal_contributions_traceless", r.off_diagonal_contributions_traceless},
          {"all_equal", r.all_equal},
          {"nonvanishing", r.nonvanishing}};
}

DiagonalBracketReport diagonal_bracket_from_json(const json& j, Field field) {
  const StarContext ctx = context_from_json(member(j, "context"), field);
  auto poly = [field](const json& x) { return poly_from_json(x, field); };
  DiagonalBracketReport r{poly_matrix_from_json(member(j, "order0"), field),
                          poly_matrix_from_json(member(j, "order1"), field),
                          vector_from(member(j, "diagonal"), poly),
                          vector_from(member(j, "brackets"), poly),
                          get<std::vector<bool>>(j, "entry_equal"),
                          get<bool>(j, "off_diagonal_contributions_traceless"),
                          get<bool>(j, "all_equal"),
                          get<bool>(j, "nonvanishing")};
  const auto recomputed = eq1_diagonal_check(series_matrix_from_json(member(j, "f"), field),
                                             series_matrix_from_json(member(j, "g"), field), ctx);
  require(recomputed == r, "diagonal bracket check differs from recomputation");
  return r;
}

// ---------------------------------------------------------------------------
// Pipelines

json to_json(const PipelineReport& r, const StarContext& ctx) {
  json out = {{"kind", r.kind == PipelineReport::Kind::Pipeline ? "pipeline" : "probe"}};
  if (r.f) {
    out["f"] = to_json(*r.f);
    out["g"] = to_json(*r.g);
    out["generators"] = r.f->generators();
  }
  out["nmax"] = r.nmax;
  out["dmax"] = r.dmax;
  out["context"] = context_json(ctx);
  out["free_commute"] = r.free_commute;
  out["sizes"] = array_of(r.sizes, size_result_json);
  out["stability_all_found"] = r.stability_all_found;
  out["stability_coincide"] = r.stability_coincide;
  out["verdict"] = verdict_name(r.verdict);
  out["verdict_line"] = r.verdict_line();
  return out;
}

LoadedPipeline pipeline_from_json(const json& j, Field field) {
  const StarContext ctx = context_from_json(member(j, "context"), field);
  PipelineReport r;
  const auto kind = get<std::string>(j, "kind");
  if (kind != "pipeline" && kind != "probe") invalid("unknown report kind \"" + kind + "\"");
  r.kind = kind == "pipeline" ? PipelineReport::Kind::Pipeline : PipelineReport::Kind::Probe;
  if (r.kind == PipelineReport::Kind::Pipeline) {
    const auto s = get<std::size_t>(j, "generators");
    r.f = free_from_json(member(j, "f"), s, field);
    r.g = free_from_json(member(j, "g"), s, field);
  }
  r.nmax = get<std::size_t>(j, "nmax");
  r.dmax = get<std::size_t>(j, "dmax");
  r.order = ctx.order();
  r.free_commute = get<bool>(j, "free_commute");
  r.sizes = vector_from(member(j, "sizes"), [field](const json& x) { return size_result_from(x, field); });
  r.stability_all_found = get<bool>(j, "stability_all_found");
  r.stability_coincide = get<bool>(j, "stability_coincide");
  r.verdict = verdict_from(get<std::string>(j, "verdict"));

  for (const auto& size : r.sizes) {
    if (size.annihilator.found) require(size.annihilator.polynomial.evaluate(size.f_image, size.g_image).is_zero(), "P(F, G) = 0");
  }
  PipelineReport recomputed;
  if (r.kind == PipelineReport::Kind::Pipeline) {
    recomputed = bergman_pipeline(*r.f, *r.g, r.nmax, r.dmax, ctx);
  } else {
    if (r.sizes.size() != 1) invalid("probe reports hold exactly one size");
    recomputed = commuting_matrix_probe(r.sizes[0].f_image, r.sizes[0].g_image, r.dmax, ctx);
  }
  require(recomputed == r, "pipeline report differs from recomputation");
  return {std::move(r), ctx.tensor()};
}

// ---------------------------------------------------------------------------
// Diagonalization

json to_json(const DiagonalizationRun<Scalar>& run) { return diagonalization_json(run); }
json to_json(const DiagonalizationRun<RationalFunction>& run) { return diagonalization_json(run); }

DiagonalizationRun<Scalar> scalar_diagonalization_from_json(const json& j, Field field) {
  return diagonalization_from<Scalar>(j, field);
}

DiagonalizationRun<RationalFunction> rational_diagonalization_from_json(const json& j, Field field) {
  return diagonalization_from<RationalFunction>(j, field);
}

// ---------------------------------------------------------------------------
// Envelope

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Ok: return "OK";
  }
  return "OK";
}

json envelope(const RunInfo& info, Status status, json report) {
  json bounds = json::object();
  for (const auto& [k, v] : info.bounds) bounds[k] = v;
  return {{"engine", kEngineName},
          {"version", kEngineVersion},
          {"command", info.command},
          {"field", info.field.to_string()},
          {"seed", info.seed},
          {"bounds", bounds},
          {"status", status_name(status)},
          {"report", std::move(report)}};
}

RunInfo run_info_from_json(const json& doc) {
  RunInfo info;
  info.command = get<std::string>(doc, "command");
  info.field = Field::parse(get<std::string>(doc, "field"));
  info.seed = get<std::uint64_t>(doc, "seed");
  for (const auto& [k, v] : member(doc, "bounds").items()) info.bounds[k] = v.get<std::uint64_t>();
  return info;
}

}  // namespace bergq::io
