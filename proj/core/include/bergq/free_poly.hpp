#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bergq/comm_poly.hpp"
#include "bergq/matrix.hpp"
#include "bergq/scalar.hpp"

namespace bergq {

// A word in x1..xs: generator indices (1-based), empty = identity.
using Word = std::vector<std::uint32_t>;

// Degree of a free polynomial; nullopt is the degree of zero and compares
// below every finite degree.
using Degree = std::optional<std::size_t>;

// Graded-lex order on words, longest first; among equal lengths x1 > x2 > ...
// at the first differing letter.
struct WordGreater {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
  }
};

std::string word_to_string(const Word& w);

// Element of k<x1,...,xs>.
class FreePoly {
 public:
  using Terms = std::map<Word, Scalar, WordGreater>;

  FreePoly(Field field, std::size_t generators) : field_(field), s_(generators) {}
  static FreePoly constant(Field field, std::size_t generators, const Scalar& c);
  // x_index, 1-based. Throws UnknownGenerator.
  static FreePoly generator(Field field, std::size_t generators, std::uint32_t index);
  static FreePoly monomial(Field field, std::size_t generators, const Word& w, const Scalar& c);
  // Throws SyntaxError (with position) or UnknownGenerator.
  static FreePoly parse(std::string_view text, std::size_t generators, Field field);

  Field field() const noexcept { return field_; }
  std::size_t generators() const noexcept { return s_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_scalar() const;
  Degree degree() const;
  Scalar coefficient(const Word& w) const;
  Scalar constant_term() const { return coefficient(Word{}); }

  void add_term(const Word& w, const Scalar& c);

  FreePoly operator-() const;
  friend FreePoly operator+(const FreePoly& a, const FreePoly& b);
  friend FreePoly operator-(const FreePoly& a, const FreePoly& b);
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
  FreePoly& operator+=(const FreePoly& b);
  FreePoly& operator-=(const FreePoly& b);
  FreePoly scaled(const Scalar& c) const;
  FreePoly pow(unsigned e) const;

  friend bool operator==(const FreePoly& a, const FreePoly& b) {
    return a.field_ == b.field_ && a.s_ == b.s_ && a.terms_ == b.terms_;
  }

  // Deterministic rendering in descending graded-lex order, parseable by
  // parse(): "x1*x2 - x2*x1", "x1^2*x2 + 3/2", "0".
  std::string to_string() const;

 private:
  void check_compatible(const FreePoly& b) const;

  Field field_;
  std::size_t s_;
  Terms terms_;
};

FreePoly commutator(const FreePoly& a, const FreePoly& b);

// Words of length exactly m.
FreePoly homogeneous_component(const FreePoly& a, std::size_t m);

std::ostream& operator<<(std::ostream& os, const FreePoly& p);

// The algebra homomorphism x_l -> images[l-1] applied to a. `embed` maps a
// Scalar to the matrix entry ring; scalars act as scalar multiples of the
// identity and the empty word maps to the identity.
template <class T, class Embed>
Matrix<T> evaluate_in_matrices(const FreePoly& a, const std::vector<Matrix<T>>& images, Embed embed) {
  if (images.size() != a.generators()) {
    raise(ErrorCode::ShapeMismatch, "expected " + std::to_string(a.generators()) + " images, got " +
                                        std::to_string(images.size()));
  }
  if (images.empty()) raise(ErrorCode::ShapeMismatch, "no images");
  const std::size_t n = images.front().rows();
  for (const auto& m : images) {
    if (!m.is_square() || m.rows() != n || n == 0) raise(ErrorCode::ShapeMismatch, "images must be square and equal-sized");
  }
  const T zero = embed(Scalar::zero(a.field()));
  const T one = embed(Scalar::one(a.field()));
  Matrix<T> result(n, n, zero);
  std::map<Word, Matrix<T>> prefix;  // products of word prefixes
  prefix.emplace(Word{}, Matrix<T>::identity(n, zero, one));
  for (const auto& [w, c] : a.terms()) {
    Word head;
    const Matrix<T>* product = &prefix.at(head);
    for (std::uint32_t letter : w) {
      head.push_back(letter);
      auto it = prefix.find(head);
      if (it == prefix.end()) {
        it = prefix.emplace(head, *product * images[letter - 1]).first;
      }
      product = &it->second;
    }
    const T coeff = embed(c);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const T& x = (*product)(i, j);
        if (!x.is_zero()) result(i, j) = result(i, j) + coeff * x;
      }
    }
  }
  return result;
}

inline Matrix<CommPoly> evaluate_in_matrices(const FreePoly& a, const std::vector<Matrix<CommPoly>>& images) {
  return evaluate_in_matrices(a, images, [](const Scalar& c) { return CommPoly(c); });
}

inline Matrix<Scalar> evaluate_in_matrices(const FreePoly& a, const std::vector<Matrix<Scalar>>& images) {
  return evaluate_in_matrices(a, images, [](const Scalar& c) { return c; });
}

}  // namespace bergq
