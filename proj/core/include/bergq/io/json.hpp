#pragma once

// JSON encoding of values and reports. Every *_from_json parses and then
// re-verifies the stored claims by recomputation or by direct substitution;
// a report whose claims fail raises InvalidReport. Round trips are exact:
// X_from_json(to_json(x)) == x.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "bergq/annihilator.hpp"
#include "bergq/centralizer.hpp"
#include "bergq/diagonalization.hpp"
#include "bergq/generic_matrix.hpp"
#include "bergq/quantization.hpp"
#include "bergq/rational_function.hpp"

namespace bergq::io {

using json = nlohmann::ordered_json;

// ---- scalars, polynomials, matrices ---------------------------------------

json to_json(const Scalar& c);
Scalar scalar_from_json(const json& j, Field field);
json to_json(const CommPoly& p);
CommPoly poly_from_json(const json& j, Field field);
json to_json(const RationalFunction& r);  // {"num": ..., "den": ...}
RationalFunction rational_from_json(const json& j, Field field);
json to_json(const FreePoly& p);
FreePoly free_from_json(const json& j, std::size_t generators, Field field);
json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const json& j, Field field);
json to_json(const GenericMatrix& m);  // {"origin": l, "entries": [[...]]}
GenericMatrix generic_from_json(const json& j, Field field);

// ---- Poisson tensors -------------------------------------------------------
// {"variables": [names], "entries": [[i, j, "c"], ...]}, 0-based indices,
// upper triangle only (i < j).

json to_json(const PoissonTensor& t);
PoissonTensor poisson_from_json(const json& j, Field field);
PoissonTensor load_poisson_file(const std::filesystem::path& path, Field field);

// ---- reports ---------------------------------------------------------------

json to_json(const AnnihilatorResult& r);
AnnihilatorResult annihilator_from_json(const json& j, Field field);
// With the pair it was computed from: recomputes and compares.
void verify_annihilator(const AnnihilatorResult& r, const GenericMatrix& f, const GenericMatrix& g);

json to_json(const StabilityReport& r);
StabilityReport stability_from_json(const json& j, Field field);

json to_json(const AmitsurLevitzkiReport& r);
AmitsurLevitzkiReport amitsur_levitzki_from_json(const json& j, Field field);

json to_json(const CentralizerBasis& b);
CentralizerBasis centralizer_from_json(const json& j, Field field);

json to_json(const BergmanReport& r);
BergmanReport bergman_from_json(const json& j, Field field);

json to_json(const SeriesMatrix& m);  // [coefficient matrix of h^0, h^1, ...]
SeriesMatrix series_matrix_from_json(const json& j, Field field);

// These embed their inputs, tensor and truncation order.
json to_json(const CorrespondenceReport& r, const CommPoly& a, const CommPoly& b, const StarContext& ctx);
CorrespondenceReport correspondence_from_json(const json& j, Field field);

json to_json(const DiagonalBracketReport& r, const SeriesMatrix& f, const SeriesMatrix& g, const StarContext& ctx);
DiagonalBracketReport diagonal_bracket_from_json(const json& j, Field field);

// Pipeline and probe reports embed the tensor and truncation order so that
// star-commutator coefficients can be recomputed on load.
json to_json(const PipelineReport& r, const StarContext& ctx);
struct LoadedPipeline {
  PipelineReport report;
  PoissonTensor tensor;
};
LoadedPipeline pipeline_from_json(const json& j, Field field);

// Diagonalization reports embed the input series A (and companion).
template <class F>
struct DiagonalizationRun {
  FieldSeriesMatrix<F> input;
  std::optional<FieldSeriesMatrix<F>> companion;
  std::size_t target = 0;
  DiagonalReport<F> report;
};
json to_json(const DiagonalizationRun<Scalar>& run);
json to_json(const DiagonalizationRun<RationalFunction>& run);
DiagonalizationRun<Scalar> scalar_diagonalization_from_json(const json& j, Field field);
DiagonalizationRun<RationalFunction> rational_diagonalization_from_json(const json& j, Field field);

// ---- envelope --------------------------------------------------------------

struct RunInfo {
  std::string command;
  Field field = Field::rationals();
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> bounds;
  friend bool operator==(const RunInfo&, const RunInfo&) = default;
};

enum class Status { Pass, Fail, Ok };
std::string status_name(Status s);

// {"engine", "version", "command", "field", "seed", "bounds", "status", "report"}
json envelope(const RunInfo& info, Status status, json report);
RunInfo run_info_from_json(const json& doc);

}  // namespace bergq::io
