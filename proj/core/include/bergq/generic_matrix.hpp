#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bergq/comm_poly.hpp"
#include "bergq/free_poly.hpp"
#include "bergq/matrix.hpp"

namespace bergq {

using PolyMatrix = Matrix<CommPoly>;

// n x n matrix over k[x_ij^l]. A freshly made generator X^l has entry (i,j)
// equal to the variable x_ij^l; anything computed from generators is a
// composite (origin 0).
class GenericMatrix {
 public:
  GenericMatrix(PolyMatrix entries, unsigned origin = 0);

  static GenericMatrix identity(std::size_t n, Field field);
  static GenericMatrix zero(std::size_t n, Field field);
  static GenericMatrix diagonal(const std::vector<CommPoly>& entries);

  std::size_t size() const noexcept { return m_.rows(); }
  Field field() const { return m_(0, 0).field(); }
  // 1-based generator index, 0 for composites.
  unsigned origin() const noexcept { return origin_; }
  const PolyMatrix& entries() const noexcept { return m_; }
  const CommPoly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  bool is_zero() const { return m_.is_zero(); }

  friend GenericMatrix operator+(const GenericMatrix& a, const GenericMatrix& b);
  friend GenericMatrix operator-(const GenericMatrix& a, const GenericMatrix& b);
  friend GenericMatrix operator*(const GenericMatrix& a, const GenericMatrix& b);
  GenericMatrix operator-() const { return GenericMatrix(-m_); }
  GenericMatrix pow(unsigned e) const;

  friend bool operator==(const GenericMatrix& a, const GenericMatrix& b) { return a.m_ == b.m_; }

  // "[[x1_1_1, x1_1_2], [x1_2_1, x1_2_2]]"
  std::string to_string() const;

 private:
  PolyMatrix m_;
  unsigned origin_;
};

// X^1..X^s with entry (i,j) of X^l equal to x_ij^l. Throws InvalidSize for
// s == 0 or n == 0.
std::vector<GenericMatrix> make_generic(std::size_t s, std::size_t n, Field field);

// The reduction k<x1..xs> -> k<X^1..X^s> at size n.
GenericMatrix pi_reduce(const FreePoly& f, std::size_t n);

GenericMatrix commutator(const GenericMatrix& a, const GenericMatrix& b);

struct CharacteristicPolynomial {
  CommPoly trace;
  // c_0..c_n of det(tI - A); c_n = 1.
  std::vector<CommPoly> coefficients;
};

// Faddeev-LeVerrier. Throws CharacteristicTooSmall when 0 < char <= n.
CharacteristicPolynomial trace_and_charpoly(const GenericMatrix& a);

// sum_k c_k A^k for the given coefficients.
GenericMatrix evaluate_charpoly(const std::vector<CommPoly>& coefficients, const GenericMatrix& a);

// S_k(M_1..M_k) = sum over permutations of sign * ordered product.
GenericMatrix standard_identity(const std::vector<GenericMatrix>& ms);

// S_2n on 2n fresh generic n x n matrices, and S_{2n-1} on a fixed tuple of
// matrix units (E11, E12, E21 at n = 2; E11, E12, E22, E23, ..., Enn
// otherwise) that it does not annihilate.
struct AmitsurLevitzkiReport {
  std::size_t n = 0;
  GenericMatrix identity_value;  // S_2n(X^1..X^2n)
  std::vector<GenericMatrix> witness_arguments;
  GenericMatrix witness_value;   // S_{2n-1}(witness_arguments)
  bool identity_vanishes = false;
  bool witness_nonzero = false;
  bool pass() const { return identity_vanishes && witness_nonzero; }
  friend bool operator==(const AmitsurLevitzkiReport&, const AmitsurLevitzkiReport&) = default;
};

AmitsurLevitzkiReport amitsur_levitzki_check(std::size_t n, Field field);

// Matrix unit E_ij (1-based) over constants.
GenericMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j, Field field);

}  // namespace bergq
