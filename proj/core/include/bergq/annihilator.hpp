#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bergq/comm_poly.hpp"
#include "bergq/free_poly.hpp"
#include "bergq/generic_matrix.hpp"

namespace bergq {

// Polynomial P(u, v) in two commuting letters, stored as a CommPoly in the
// auxiliary variables u and v. u precedes v, so graded-lex order reads
// u^2 > u*v > v^2 > u > v > 1.
class BivariatePoly {
 public:
  explicit BivariatePoly(Field field) : p_(field) {}
  // Throws UnknownVariable if p mentions anything but u and v.
  explicit BivariatePoly(CommPoly p);
  static BivariatePoly parse(std::string_view text, Field field);

  static Variable u() { return Variable::aux("u"); }
  static Variable v() { return Variable::aux("v"); }

  void add_term(std::uint32_t a, std::uint32_t b, const Scalar& c);
  Scalar coefficient(std::uint32_t a, std::uint32_t b) const;
  const CommPoly& poly() const noexcept { return p_; }
  Field field() const noexcept { return p_.field(); }
  bool is_zero() const noexcept { return p_.is_zero(); }
  long total_degree() const { return p_.degree(); }

  // P(F, G) for commuting F, G.
  GenericMatrix evaluate(const GenericMatrix& f, const GenericMatrix& g) const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;
  std::string to_string() const { return p_.to_string(); }

 private:
  CommPoly p_;
};

struct AnnihilatorResult {
  bool found = false;
  // Valid when found: normalized minimal annihilator, its total degree and
  // the matrix size it was computed at.
  BivariatePoly polynomial{Field::rationals()};
  std::size_t degree = 0;
  std::size_t matrix_size = 0;
  // Largest total degree examined (Dmax when nothing was found).
  std::size_t searched_bound = 0;
  // Dimension of the kernel at the minimal degree.
  std::size_t kernel_dimension = 0;

  friend bool operator==(const AnnihilatorResult&, const AnnihilatorResult&) = default;
};

// Minimal-total-degree P with P(F, G) = 0, found by exact kernel computation
// on span{F^a G^b : a + b <= D} for D = 0, 1, ..., dmax. Throws
// NotCommuting if FG != GF and ShapeMismatch on size mismatch.
AnnihilatorResult find_annihilator(const GenericMatrix& f, const GenericMatrix& g, std::size_t dmax);

struct StabilityReport {
  std::vector<std::size_t> sizes;
  std::vector<AnnihilatorResult> results;  // parallel to sizes
  // All sizes found an annihilator and the normalized polynomials coincide.
  bool all_found = false;
  bool coincide = false;

  friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

// Runs find_annihilator on (pi_n f, pi_n g) for each n. Throws NotCommuting
// unless [f, g] = 0 in the free algebra.
StabilityReport annihilator_stability(const FreePoly& f, const FreePoly& g, const std::vector<std::size_t>& sizes,
                                      std::size_t dmax);

}  // namespace bergq
