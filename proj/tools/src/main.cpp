// bergq: command-line front end. Exit status 0 = pass/ok, 1 = usage or
// arithmetic error, 2 = a mathematical check that does not hold.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bergq/centralizer.hpp"
#include "bergq/diagonalization.hpp"
#include "bergq/error.hpp"
#include "bergq/io/json.hpp"
#include "bergq/random.hpp"
#include "bergq/version.hpp"
#include "literals.hpp"

namespace bergq::cli {
namespace {

using io::json;
using io::Status;

struct Common {
  std::string field = "q";
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  std::string out;
};

struct Outcome {
  Status status = Status::Ok;
  json report;
  std::string text;
  std::map<std::string, std::uint64_t> bounds;
};

// ---- rendering --------------------------------------------------------------

template <class T, class Fmt>
std::string matrix_text(const Matrix<T>& m, Fmt fmt) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + fmt(m(i, j));
    out += "]";
  }
  return out + "]";
}

std::string poly_matrix_text(const PolyMatrix& m) {
  return matrix_text(m, [](const CommPoly& p) { return p.to_string(); });
}

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// "E12" for a matrix unit, the full matrix otherwise.
std::string unit_name(const GenericMatrix& m) {
  std::string name;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (!name.empty() || !m(i, j).is_constant() || !m(i, j).constant_term().is_one()) return m.to_string();
      name = "E" + std::to_string(i + 1) + std::to_string(j + 1);
    }
  return name.empty() ? m.to_string() : name;
}

// ---- shared inputs -----------------------------------------------------------

PoissonTensor tensor_for(const std::string& source, Field field, const std::set<Variable>& vars) {
  if (source == "pairing") return PoissonTensor::pairing(field, {vars.begin(), vars.end()});
  return io::load_poisson_file(source, field);
}

std::set<Variable> variables_of(const std::vector<const CommPoly*>& ps) {
  std::set<Variable> out;
  for (const auto* p : ps) {
    auto v = p->variables();
    out.insert(v.begin(), v.end());
  }
  return out;
}

std::set<Variable> variables_of(const PolyMatrix& m, std::set<Variable> acc = {}) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto v = m(i, j).variables();
      acc.insert(v.begin(), v.end());
    }
  return acc;
}

void require_known(const PoissonTensor& t, const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.require_known(m(i, j));
}

SeriesMatrix to_series(const std::vector<PolyMatrix>& coeffs, std::size_t order) {
  const std::size_t n = coeffs.front().rows();
  const Field field = coeffs.front()(0, 0).field();
  SeriesMatrix m(n, n, FormalSeries(field, order));
  for (std::size_t r = 0; r < coeffs.size() && r <= order; ++r)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j)[r] = coeffs[r](i, j);
  return m;
}

// ---- subcommands -------------------------------------------------------------

struct Args {
  std::string f, g, a, b, big_f, big_g, series, companion, poisson = "pairing";
  std::size_t s = 2, n = 2, nmax = 2, d = 4, dmax = 4, order = 2, count = 200;
  bool eq1 = false;
};

Outcome cmd_eval(const Args& x, Field field, bool with_n) {
  const auto f = FreePoly::parse(x.f, x.s, field);
  Outcome o;
  o.bounds = {{"s", x.s}};
  o.report = {{"input", x.f}, {"normalized", io::to_json(f)}, {"degree", f.degree() ? json(*f.degree()) : json()}};
  o.text = "f = " + f.to_string() + "\n";
  o.text += "degree = " + (f.degree() ? std::to_string(*f.degree()) : std::string("-inf")) + "\n";
  json comps = json::array();
  for (std::size_t m = 0; f.degree() && m <= *f.degree(); ++m) {
    auto c = homogeneous_component(f, m);
    comps.push_back(io::to_json(c));
    if (!c.is_zero()) o.text += "f_(" + std::to_string(m) + ") = " + c.to_string() + "\n";
  }
  o.report["homogeneous_components"] = comps;
  if (with_n) {
    o.bounds["n"] = x.n;
    auto image = pi_reduce(f, x.n);
    o.report["image"] = io::to_json(image);
    o.text += "pi_" + std::to_string(x.n) + "(f) = " + image.to_string() + "\n";
  }
  return o;
}

Outcome cmd_commute(const Args& x, Field field) {
  const auto f = FreePoly::parse(x.f, x.s, field), g = FreePoly::parse(x.g, x.s, field);
  const auto c = commutator(f, g);
  Outcome o;
  o.bounds = {{"s", x.s}};
  o.report = {{"f", io::to_json(f)}, {"g", io::to_json(g)}, {"commutator", io::to_json(c)}, {"commute", c.is_zero()}};
  o.text = "[f, g] = " + c.to_string() + "\n";
  return o;
}

Outcome cmd_pi(const Args& x, Field field) {
  const auto f = FreePoly::parse(x.f, x.s, field);
  const auto image = pi_reduce(f, x.n);
  const auto cp = trace_and_charpoly(image);
  Outcome o;
  o.bounds = {{"s", x.s}, {"n", x.n}};
  json coeffs = json::array();
  for (const auto& c : cp.coefficients) coeffs.push_back(io::to_json(c));
  o.report = {{"f", io::to_json(f)}, {"image", io::to_json(image)}, {"trace", io::to_json(cp.trace)},
              {"charpoly", coeffs}};
  o.text = "pi_" + std::to_string(x.n) + "(f) = " + image.to_string() + "\n";
  o.text += "trace = " + cp.trace.to_string() + "\n";
  for (std::size_t k = 0; k < cp.coefficients.size(); ++k)
    o.text += "c_" + std::to_string(k) + " = " + cp.coefficients[k].to_string() + "\n";
  return o;
}

Outcome cmd_al(const Args& x, Field field) {
  const auto r = amitsur_levitzki_check(x.n, field);
  Outcome o;
  o.bounds = {{"n", x.n}};
  o.status = r.pass() ? Status::Pass : Status::Fail;
  o.report = io::to_json(r);
  const auto n = std::to_string(x.n);
  o.text = "S_" + std::to_string(2 * x.n) + " vanishes on " + n + "x" + n +
           " generic matrices: " + pass_fail(r.identity_vanishes) + "\n";
  std::vector<std::string> names;
  for (const auto& w : r.witness_arguments) names.push_back(unit_name(w));
  o.text += "S_" + std::to_string(2 * x.n - 1) + " on " + join(names, ", ") + " is nonzero: " +
            pass_fail(r.witness_nonzero) + "\n";
  return o;
}

Outcome cmd_annihilator(const Args& x, Field field, bool stability) {
  const auto f = FreePoly::parse(x.f, x.s, field), g = FreePoly::parse(x.g, x.s, field);
  Outcome o;
  if (stability) {
    std::vector<std::size_t> sizes;
    for (std::size_t n = 1; n <= x.nmax; ++n) sizes.push_back(n);
    const auto r = annihilator_stability(f, g, sizes, x.dmax);
    o.bounds = {{"s", x.s}, {"nmax", x.nmax}, {"dmax", x.dmax}};
    o.status = r.all_found && r.coincide ? Status::Pass : Status::Fail;
    o.report = io::to_json(r);
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      const auto& a = r.results[k];
      o.text += "n = " + std::to_string(sizes[k]) + ": " +
                (a.found ? "P = " + a.polynomial.to_string() : "none up to degree " + std::to_string(x.dmax)) + "\n";
    }
    o.text += "annihilator stable across n = 1.." + std::to_string(x.nmax) + ": " + pass_fail(o.status == Status::Pass) + "\n";
    return o;
  }
  const auto r = find_annihilator(pi_reduce(f, x.n), pi_reduce(g, x.n), x.dmax);
  o.bounds = {{"s", x.s}, {"n", x.n}, {"dmax", x.dmax}};
  o.report = io::to_json(r);
  o.text = r.found ? "P = " + r.polynomial.to_string() + " (degree " + std::to_string(r.degree) + ", kernel dimension " +
                         std::to_string(r.kernel_dimension) + ")\n"
                   : "no annihilator up to degree " + std::to_string(x.dmax) + "\n";
  return o;
}

Outcome cmd_star(const Args& x, Field field) {
  const auto a = CommPoly::parse(x.a, field), b = CommPoly::parse(x.b, field);
  const StarContext ctx(tensor_for(x.poisson, field, variables_of({&a, &b})), x.order);
  ctx.tensor().require_known(a);
  ctx.tensor().require_known(b);
  const auto la = FormalSeries::lift(a, x.order), lb = FormalSeries::lift(b, x.order);
  const auto ab = star_mul(la, lb, ctx), ba = star_mul(lb, la, ctx), comm = star_commutator(la, lb, ctx);
  auto series_json = [](const FormalSeries& s) {
    json out = json::array();
    for (const auto& c : s.coefficients()) out.push_back(io::to_json(c));
    return out;
  };
  Outcome o;
  o.bounds = {{"order", x.order}};
  o.report = {{"a", io::to_json(a)}, {"b", io::to_json(b)}, {"tensor", io::to_json(ctx.tensor())},
              {"order", x.order}, {"a_star_b", series_json(ab)}, {"b_star_a", series_json(ba)},
              {"commutator", series_json(comm)}};
  o.text = "a * b = " + ab.to_string() + "\n";
  o.text += "b * a = " + ba.to_string() + "\n";
  o.text += "[a, b]_* = " + comm.to_string() + "\n";
  return o;
}

Outcome cmd_poisson(const Args& x, Field field, std::uint64_t seed, bool single) {
  Outcome o;
  o.bounds = {{"order", x.order}};
  if (single) {
    const auto a = CommPoly::parse(x.a, field), b = CommPoly::parse(x.b, field);
    const StarContext ctx(tensor_for(x.poisson, field, variables_of({&a, &b})), x.order);
    ctx.tensor().require_known(a);
    ctx.tensor().require_known(b);
    const auto r = verify_correspondence(a, b, ctx);
    o.status = r.holds ? Status::Pass : Status::Fail;
    o.report = io::to_json(r, a, b, ctx);
    o.text = "h^1 coefficient of [a, b]_* = " + r.star_h1.to_string() + "\n";
    o.text += "{a, b} = " + r.bracket.to_string() + "\n";
    o.text += "correspondence: " + pass_fail(r.holds) + "\n";
    return o;
  }
  // Random pairs over x1, x2, y1, y2 with total degree <= 3.
  const std::vector<Variable> vars{Variable::aux("x", 1), Variable::aux("x", 2), Variable::aux("y", 1),
                                   Variable::aux("y", 2)};
  const StarContext ctx(x.poisson == "pairing" ? PoissonTensor::pairing(field, vars)
                                               : io::load_poisson_file(x.poisson, field),
                        x.order);
  RandomSource rng(seed);
  std::size_t holds = 0;
  json failures = json::array();
  for (std::size_t k = 0; k < x.count; ++k) {
    const auto a = rng.comm_poly(field, vars, 3, 4), b = rng.comm_poly(field, vars, 3, 4);
    ctx.tensor().require_known(a);
    ctx.tensor().require_known(b);
    const auto r = verify_correspondence(a, b, ctx);
    if (r.holds) {
      ++holds;
    } else {
      failures.push_back(io::to_json(r, a, b, ctx));
    }
  }
  o.bounds["count"] = x.count;
  o.status = holds == x.count ? Status::Pass : Status::Fail;
  o.report = {{"pairs", x.count}, {"holds", holds}, {"tensor", io::to_json(ctx.tensor())}, {"failures", failures}};
  o.text = "correspondence on " + std::to_string(x.count) + " random pairs: " + std::to_string(holds) + "/" +
           std::to_string(x.count) + " " + pass_fail(o.status == Status::Pass) + "\n";
  return o;
}

template <class F, class Conv>
FieldSeriesMatrix<F> field_series(const std::vector<PolyMatrix>& coeffs, Conv conv) {
  std::vector<Matrix<F>> out;
  for (const auto& c : coeffs) {
    Matrix<F> m(c.rows(), c.cols(), conv(CommPoly(c(0, 0).field())));
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = conv(c(i, j));
    out.push_back(std::move(m));
  }
  return FieldSeriesMatrix<F>(std::move(out));
}

template <class F>
Outcome diag_run(const std::vector<PolyMatrix>& a, const std::optional<std::vector<PolyMatrix>>& comp,
                 std::size_t target, std::function<F(const CommPoly&)> conv) {
  auto input = field_series<F>(a, conv);
  std::optional<FieldSeriesMatrix<F>> companion;
  if (comp) companion = field_series<F>(*comp, conv);
  auto report = successive_diagonalize(input, target, companion ? &*companion : nullptr);
  const io::DiagonalizationRun<F> run{std::move(input), std::move(companion), target, std::move(report)};
  Outcome o;
  o.report = io::to_json(run);
  const auto& r = run.report;
  o.status = r.verified && (!comp || r.companion_diagonal) ? Status::Pass : Status::Fail;
  auto fmt = [](const F& v) { return v.to_string(); };
  std::vector<std::string> eig;
  for (const auto& e : r.eigenvalues) eig.push_back(e.to_string());
  o.text = "eigenvalues: " + join(eig, ", ") + "\n";
  for (std::size_t k = 0; k <= r.achieved_order; ++k) {
    o.text += "D_" + std::to_string(k) + " = " + matrix_text(r.diagonal[k], fmt) + "\n";
    o.text += "T_" + std::to_string(k) + " = " + matrix_text(r.conjugator[k], fmt) + "\n";
  }
  if (comp) {
    std::vector<std::string> mu;
    for (const auto& e : r.companion_eigenvalues) mu.push_back(e.to_string());
    o.text += "companion eigenvalues: " + join(mu, ", ") + "\n";
    o.text += "companion diagonal: " + pass_fail(r.companion_diagonal) + "\n";
  }
  o.text += "diagonalized through order " + std::to_string(r.achieved_order) + ": " + pass_fail(r.verified) + "\n";
  return o;
}

Outcome cmd_diag(const Args& x, Field field, bool order_given) {
  if (x.eq1) {
    const auto fc = parse_series(x.big_f, field), gc = parse_series(x.big_g, field);
    auto vars = variables_of(fc.front());
    for (const auto& c : fc) vars = variables_of(c, vars);
    for (const auto& c : gc) vars = variables_of(c, vars);
    const StarContext ctx(tensor_for(x.poisson, field, vars), x.order);
    for (const auto& c : fc) require_known(ctx.tensor(), c);
    for (const auto& c : gc) require_known(ctx.tensor(), c);
    const auto f = to_series(fc, x.order), g = to_series(gc, x.order);
    const auto r = eq1_diagonal_check(f, g, ctx);
    Outcome o;
    o.bounds = {{"order", x.order}};
    o.status = r.all_equal && r.off_diagonal_contributions_traceless ? Status::Pass : Status::Fail;
    o.report = io::to_json(r, f, g, ctx);
    for (std::size_t i = 0; i < r.diagonal.size(); ++i) {
      o.text += "([f, g]_*)_" + std::to_string(i + 1) + std::to_string(i + 1) + " at h^1 = " + r.diagonal[i].to_string() +
                "; {f_ii, g_ii} = " + r.brackets[i].to_string() + "\n";
    }
    o.text += "diagonal of h^1 coefficient equals entrywise brackets: " + pass_fail(r.all_equal) + "\n";
    o.text += "off-diagonal corrections leave the diagonal unchanged: " +
              pass_fail(r.off_diagonal_contributions_traceless) + "\n";
    return o;
  }
  const auto a = parse_series(x.series, field);
  std::optional<std::vector<PolyMatrix>> comp;
  if (!x.companion.empty()) comp = parse_series(x.companion, field);
  const std::size_t target = order_given ? x.order : a.size() - 1;
  bool constant = true;
  auto check = [&](const std::vector<PolyMatrix>& cs) {
    for (const auto& c : cs)
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) constant = constant && c(i, j).is_constant();
  };
  check(a);
  if (comp) check(*comp);
  Outcome o = constant ? diag_run<Scalar>(a, comp, target, [](const CommPoly& p) { return p.constant_term(); })
                       : diag_run<RationalFunction>(a, comp, target, [](const CommPoly& p) { return RationalFunction(p); });
  o.bounds = {{"order", target}};
  o.report = {{"entries", constant ? "scalar" : "rational-function"}, {"run", o.report}};
  return o;
}

Outcome cmd_centralizer(const Args& x, Field field) {
  const auto f = FreePoly::parse(x.f, x.s, field);
  const auto r = bergman_check(f, x.d);
  Outcome o;
  o.bounds = {{"s", x.s}, {"d", x.d}};
  o.status = r.pass ? Status::Pass : Status::Fail;
  o.report = io::to_json(r);
  o.text = "f = " + f.to_string() + "\n";
  o.text += "dim K_m, m = 0.." + std::to_string(x.d) + ": " + join(r.dimensions, " ") + "\n";
  std::vector<std::string> basis;
  for (const auto& g : r.basis.kernels.back()) basis.push_back(g.to_string());
  o.text += "basis of K_" + std::to_string(x.d) + ": " + join(basis, ", ") + "\n";
  if (r.generator) {
    o.text += "generator: " + r.generator->to_string() + "\n";
    o.text += "expected dims: " + join(r.expected_dimensions, " ") + "\n";
  }
  if (r.witness) o.text += "witness: " + r.witness->to_string() + "\n";
  if (!r.failure.empty()) o.text += "failure: " + r.failure + "\n";
  o.text += "centralizer check: " + pass_fail(r.pass) + "\n";
  return o;
}

std::string pipeline_text(const PipelineReport& r) {
  std::string out;
  if (r.f) {
    out += "f = " + r.f->to_string() + ", g = " + r.g->to_string() + "\n";
    out += std::string("[f, g] = 0 in the free algebra: ") + (r.free_commute ? "yes" : "no") + "\n";
  }
  for (const auto& s : r.sizes) {
    const auto n = std::to_string(s.n);
    out += "n = " + n + ": images commute: " + (s.images_commute ? "yes" : "no") + "; annihilator: " +
           (s.annihilator.found ? s.annihilator.polynomial.to_string() : "none up to degree " + std::to_string(r.dmax)) +
           "\n";
    out += "n = " + n + ": [F, G]_* at h^0 = " + poly_matrix_text(s.star_order0) + ", at h^1 = " +
           poly_matrix_text(s.star_order1) + "\n";
  }
  return out + r.verdict_line() + "\n";
}

Outcome cmd_pipeline(const Args& x, Field field) {
  const auto f = FreePoly::parse(x.f, x.s, field), g = FreePoly::parse(x.g, x.s, field);
  std::set<Variable> vars;
  for (const auto& m : make_generic(std::max<std::size_t>(x.s, 2), x.nmax, field)) vars = variables_of(m.entries(), vars);
  const StarContext ctx(tensor_for(x.poisson, field, vars), x.order);
  const auto r = bergman_pipeline(f, g, x.nmax, x.dmax, ctx);
  Outcome o;
  o.bounds = {{"s", x.s}, {"nmax", x.nmax}, {"dmax", x.dmax}, {"order", x.order}};
  o.status = r.verdict == PipelineVerdict::TrdegOne     ? Status::Pass
             : r.verdict == PipelineVerdict::NotCommuting ? Status::Ok
                                                          : Status::Fail;
  o.report = io::to_json(r, ctx);
  o.text = pipeline_text(r);
  return o;
}

Outcome cmd_probe(const Args& x, Field field) {
  const GenericMatrix f(parse_matrix(x.big_f, field)), g(parse_matrix(x.big_g, field));
  if (f.size() != g.size()) raise(ErrorCode::ShapeMismatch, "--F and --G differ in size");
  const StarContext ctx(tensor_for(x.poisson, field, variables_of(g.entries(), variables_of(f.entries()))), x.order);
  require_known(ctx.tensor(), f.entries());
  require_known(ctx.tensor(), g.entries());
  const auto r = commuting_matrix_probe(f, g, x.dmax, ctx);
  Outcome o;
  o.bounds = {{"dmax", x.dmax}, {"order", x.order}};
  o.report = io::to_json(r, ctx);
  o.text = "F = " + f.to_string() + ", G = " + g.to_string() + "\n" + pipeline_text(r);
  return o;
}

// ---- driver ------------------------------------------------------------------

void emit(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::Usage, "cannot write " + path);
  out << payload;
}

std::string error_payload(const Common& c, const std::string& command, const std::string& code, const std::string& msg) {
  if (!c.json) return {};
  json doc = {{"engine", kEngineName},  {"version", kEngineVersion}, {"command", command},
              {"status", "ERROR"},      {"error", {{"code", code}, {"message", msg}}}};
  return doc.dump(2) + "\n";
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"bergq: exact algebra engine for centralizers in free algebras, generic matrices and star products"};
  app.set_version_flag("--version", std::string(kEngineName) + " " + kEngineVersion);
  app.require_subcommand(1, 1);

  Common common;
  Args x;
  std::map<std::string, std::function<Outcome()>> actions;
  std::map<std::string, CLI::App*> subs;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", common.field, "coefficient field: q or fp:<p>")->default_val("q");
    sub->add_option("--seed", common.seed, "random seed (recorded in every report)")->default_val(kDefaultSeed);
    sub->add_flag("--json", common.json, "emit one JSON document instead of text");
    sub->add_option("--out", common.out, "write output to this path instead of standard output");
  };
  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    subs[name] = sub;
    return sub;
  };
  auto field = [&] { return Field::parse(common.field); };
  const std::string poisson_help = "Poisson tensor: 'pairing' or a JSON tensor file";

  {
    auto* s = add("eval", "normalize a free-algebra expression; with --n also reduce to generic matrices");
    s->add_option("--f", x.f, "expression in x1..xs")->required();
    s->add_option("--s", x.s, "number of generators")->default_val(2)->check(CLI::PositiveNumber);
    auto* n = s->add_option("--n", x.n, "matrix size for the generic-matrix image")->check(CLI::PositiveNumber);
    actions["eval"] = [&, n] { return cmd_eval(x, field(), n->count() > 0); };
  }
  {
    auto* s = add("commute", "commutator [f, g] in the free algebra");
    s->add_option("--f", x.f, "first expression")->required();
    s->add_option("--g", x.g, "second expression")->required();
    s->add_option("--s", x.s, "number of generators")->default_val(2)->check(CLI::PositiveNumber);
    actions["commute"] = [&] { return cmd_commute(x, field()); };
  }
  {
    auto* s = add("pi", "image of f in n x n generic matrices, with trace and characteristic polynomial");
    s->add_option("--f", x.f, "expression in x1..xs")->required();
    s->add_option("--s", x.s, "number of generators")->default_val(2)->check(CLI::PositiveNumber);
    s->add_option("--n", x.n, "matrix size")->default_val(2)->check(CLI::PositiveNumber);
    actions["pi"] = [&] { return cmd_pi(x, field()); };
  }
  {
    auto* s = add("al", "standard identity S_2n on n x n generic matrices and a nonvanishing S_(2n-1) witness");
    s->add_option("--n", x.n, "matrix size")->default_val(2)->check(CLI::PositiveNumber);
    actions["al"] = [&] { return cmd_al(x, field()); };
  }
  {
    auto* s = add("annihilator", "minimal P(u, v) with P(pi_n f, pi_n g) = 0; with --nmax compare sizes 1..nmax");
    s->add_option("--f", x.f, "first expression")->required();
    s->add_option("--g", x.g, "second expression")->required();
    s->add_option("--s", x.s, "number of generators")->default_val(2)->check(CLI::PositiveNumber);
    auto* n = s->add_option("--n", x.n, "matrix size (default 2)")->check(CLI::PositiveNumber);
    auto* nmax = s->add_option("--nmax", x.nmax, "compare all sizes 1..nmax")->check(CLI::PositiveNumber);
    n->excludes(nmax);
    s->add_option("--dmax", x.dmax, "total degree bound for P")->default_val(4);
    actions["annihilator"] = [&, nmax] { return cmd_annihilator(x, field(), nmax->count() > 0); };
  }
  {
    auto* s = add("star", "truncated Moyal products a * b, b * a and the star commutator");
    s->add_option("--a", x.a, "commutative polynomial")->required();
    s->add_option("--b", x.b, "commutative polynomial")->required();
    s->add_option("--order", x.order, "truncation order N (terms through h^N)")->default_val(2);
    s->add_option("--poisson", x.poisson, poisson_help)->default_val("pairing");
    actions["star"] = [&] { return cmd_star(x, field()); };
  }
  {
    auto* s = add("poisson", "check that the h^1 coefficient of [a, b]_* is the Poisson bracket {a, b}");
    auto* a = s->add_option("--a", x.a, "commutative polynomial (omit both for a random suite)");
    auto* b = s->add_option("--b", x.b, "commutative polynomial");
    a->needs(b);
    b->needs(a);
    s->add_option("--order", x.order, "truncation order N >= 2")->default_val(2)->check(CLI::Range(2, 1000));
    s->add_option("--count", x.count, "random pairs over x1, x2, y1, y2 when --a/--b are omitted")->default_val(200);
    s->add_option("--poisson", x.poisson, poisson_help)->default_val("pairing");
    actions["poisson"] = [&, a] { return cmd_poisson(x, field(), common.seed, a->count() > 0); };
  }
  {
    auto* s = add("diag", "diagonalize A_0 + h A_1 + ... by conjugation; with --eq1 compare diagonal brackets");
    auto* series = s->add_option("--A", x.series, "series literal '[[..]]; [[..]]; ...' (coefficients of h^0, h^1, ...)");
    auto* comp = s->add_option("--companion", x.companion, "series conjugated alongside A");
    auto* eq1 = s->add_flag("--eq1", x.eq1, "compare [f, g]_* at h^1 with entrywise brackets of diagonal parts");
    auto* ff = s->add_option("--F", x.big_f, "with --eq1: series literal for f");
    auto* gg = s->add_option("--G", x.big_g, "with --eq1: series literal for g");
    auto* order = s->add_option("--order", x.order,
                                "target order (default: last coefficient); with --eq1 the truncation order");
    s->add_option("--poisson", x.poisson, poisson_help + " (with --eq1)")->default_val("pairing");
    eq1->needs(ff)->needs(gg)->excludes(series)->excludes(comp);
    ff->needs(eq1);
    gg->needs(eq1);
    comp->needs(series);
    actions["diag"] = [&, series, order] {
      if (!x.eq1 && series->count() == 0) raise(ErrorCode::Usage, "diag needs --A, or --eq1 with --F and --G");
      return cmd_diag(x, field(), order->count() > 0);
    };
  }
  {
    auto* s = add("centralizer", "degree-bounded centralizer of f and the single-generator check");
    s->add_option("--f", x.f, "non-scalar expression in x1..xs")->required();
    s->add_option("--s", x.s, "number of generators")->default_val(2)->check(CLI::PositiveNumber);
    s->add_option("--d", x.d, "degree bound")->default_val(4);
    actions["centralizer"] = [&] { return cmd_centralizer(x, field()); };
  }
  {
    auto* s = add("bergman-pipeline", "free commutator, annihilators at n = 1..nmax and star commutators of lifts");
    s->add_option("--f", x.f, "first expression")->required();
    s->add_option("--g", x.g, "second expression")->required();
    s->add_option("--s", x.s, "number of generators")->default_val(2)->check(CLI::PositiveNumber);
    s->add_option("--nmax", x.nmax, "largest matrix size")->default_val(2)->check(CLI::PositiveNumber);
    s->add_option("--dmax", x.dmax, "annihilator degree bound")->default_val(4);
    s->add_option("--order", x.order, "star truncation order (>= 1)")->default_val(2)->check(CLI::PositiveNumber);
    s->add_option("--poisson", x.poisson, poisson_help + " over generic-matrix entries")->default_val("pairing");
    actions["bergman-pipeline"] = [&] { return cmd_pipeline(x, field()); };
  }
  {
    auto* s = add("probe", "annihilator and star commutator for an explicit commuting matrix pair");
    s->add_option("--F", x.big_f, "matrix literal '[[..], [..]]'")->required();
    s->add_option("--G", x.big_g, "matrix literal")->required();
    s->add_option("--dmax", x.dmax, "annihilator degree bound")->default_val(4);
    s->add_option("--order", x.order, "star truncation order (>= 1)")->default_val(2)->check(CLI::PositiveNumber);
    s->add_option("--poisson", x.poisson, poisson_help)->default_val("pairing");
    actions["probe"] = [&] { return cmd_probe(x, field()); };
  }

  std::string command;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }

  try {
    Outcome o = actions.at(command)();
    io::RunInfo info{command, field(), common.seed, o.bounds};
    std::string payload =
        common.json ? io::envelope(info, o.status, std::move(o.report)).dump(2) + "\n" : o.text;
    emit(payload, common.out);
    return o.status == Status::Fail ? 2 : 0;
  } catch (const Error& e) {
    const std::string code = std::string(error_code_name(e.code()));
    std::cerr << "bergq " << command << ": error " << static_cast<int>(e.code()) << " " << e.what() << "\n";
    if (common.json) std::cout << error_payload(common, command, code, e.what());
    return 1;
  }
}

}  // namespace bergq::cli

int main(int argc, char** argv) { return bergq::cli::run(argc, argv); }
