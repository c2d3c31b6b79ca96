#pragma once

// Seeded generators for randomized suites. All draws go through
// std::mt19937_64 so a seed fixes every value on a given standard library.

#include <cstdint>
#include <random>
#include <vector>

#include "bergq/comm_poly.hpp"
#include "bergq/free_poly.hpp"
#include "bergq/matrix.hpp"

namespace bergq {

inline constexpr std::uint64_t kDefaultSeed = 20190611;

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  bool coin() { return integer(0, 1) == 1; }

  // Small rational (numerator in [-bound, bound], denominator in [1, 4]) or
  // residue.
  Scalar scalar(Field field, long bound = 9);
  Scalar nonzero_scalar(Field field, long bound = 9);

  // Up to max_terms terms of total degree <= max_degree in the given variables.
  CommPoly comm_poly(Field field, const std::vector<Variable>& vars, unsigned max_degree, unsigned max_terms);

  // Up to max_terms words of length <= max_degree in x1..xs.
  FreePoly free_poly(Field field, std::size_t s, unsigned max_degree, unsigned max_terms);

  Matrix<Scalar> integer_matrix(Field field, std::size_t n, long bound = 3);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bergq
