#pragma once

// Degree-bounded centralizers in k<x1..xs> with the one-generator check.
// Pipeline runs pair annihilator search on generic-matrix images with star
// commutators of their lifts.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bergq/annihilator.hpp"
#include "bergq/free_poly.hpp"
#include "bergq/generic_matrix.hpp"
#include "bergq/quantization.hpp"

namespace bergq {

struct CentralizerBasis {
  FreePoly f;
  std::size_t bound = 0;
  // kernels[m] spans {g : deg g <= m, [f, g] = 0}; reduced echelon form in
  // graded-lex word order, listed by increasing leading word.
  std::vector<std::vector<FreePoly>> kernels;

  std::vector<std::size_t> dimensions() const;
  friend bool operator==(const CentralizerBasis&, const CentralizerBasis&) = default;
};

// Throws ScalarInput if f is a scalar.
CentralizerBasis centralizer_basis(const FreePoly& f, std::size_t d);

struct BergmanReport {
  CentralizerBasis basis;
  // Minimal-degree non-constant kernel elements, constant terms removed.
  std::vector<FreePoly> candidates;
  std::optional<FreePoly> generator;
  std::vector<std::size_t> dimensions;
  std::vector<std::size_t> expected_dimensions;  // |{j : j deg h <= m}| for the generator (empty without one)
  bool basis_commutes = false;                   // all pairs of K_d commute
  bool pass = false;
  // On failure: an element of K_d outside every candidate's power span, or
  // a note when the kernel holds only constants.
  std::optional<FreePoly> witness;
  std::string failure;

  friend bool operator==(const BergmanReport&, const BergmanReport&) = default;
};

BergmanReport bergman_check(const FreePoly& f, std::size_t d);

// Per matrix size. star_order0 / star_order1 are the h^0 and h^1 coefficients
// of [lift F, lift G]_*.
struct SizeResult {
  std::size_t n = 0;
  GenericMatrix f_image;
  GenericMatrix g_image;
  bool images_commute = false;
  AnnihilatorResult annihilator;
  PolyMatrix star_order0;
  PolyMatrix star_order1;
  bool star_vanishes = false;  // zero mod h^2

  friend bool operator==(const SizeResult&, const SizeResult&) = default;
};

enum class PipelineVerdict {
  NotCommuting,            // [f, g] != 0 in the free algebra
  TrdegOne,                // an annihilator at every size
  NoAnnihilatorStarNonzero,  // the trdeg-2 scenario: no P up to Dmax, [F, G]_* != 0 mod h^2
  Inconclusive,
};

std::string verdict_name(PipelineVerdict v);

struct PipelineReport {
  enum class Kind { Pipeline, Probe };
  Kind kind = Kind::Pipeline;
  std::optional<FreePoly> f;  // Pipeline only
  std::optional<FreePoly> g;
  std::size_t nmax = 0;
  std::size_t dmax = 0;
  std::size_t order = 0;
  bool free_commute = false;
  std::vector<SizeResult> sizes;
  bool stability_all_found = false;
  bool stability_coincide = false;
  PipelineVerdict verdict = PipelineVerdict::Inconclusive;

  // Single-line summary, e.g. "verdict: trdeg 1 (annihilator u^2 + u - v at n = 1..2)".
  std::string verdict_line() const;
  friend bool operator==(const PipelineReport&, const PipelineReport&) = default;
};

// Stops after the free-algebra test if [f, g] != 0. The tensor of ctx must
// list every entry variable of the images up to nmax.
PipelineReport bergman_pipeline(const FreePoly& f, const FreePoly& g, std::size_t nmax, std::size_t dmax,
                                const StarContext& ctx);

// Throws NotCommuting if [F, G] != 0.
PipelineReport commuting_matrix_probe(const GenericMatrix& f, const GenericMatrix& g, std::size_t dmax,
                                      const StarContext& ctx);

}  // namespace bergq
