#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bergq/scalar.hpp"
#include "bergq/variable.hpp"

namespace bergq {

// Commutative monomial: variables with positive exponents, sorted by
// variable.
class CommMonomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  CommMonomial() = default;
  explicit CommMonomial(Variable v, std::uint32_t exponent = 1);
  // Factors may be unsorted and repeated; zero exponents are dropped.
  static CommMonomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t exponent(Variable v) const;
  bool is_one() const noexcept { return factors_.empty(); }

  bool divides(const CommMonomial& other) const;
  // Requires divides(other).
  CommMonomial quotient_of(const CommMonomial& other) const;
  CommMonomial without(Variable v) const;

  friend CommMonomial operator*(const CommMonomial& a, const CommMonomial& b);
  friend bool operator==(const CommMonomial&, const CommMonomial&) = default;

  // "x^2*y", "1" for the empty monomial.
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

// Graded lexicographic comparison: -1, 0, 1. Variables earlier in the
// Variable order are larger in lex (x1 > x2).
int grlex_compare(const CommMonomial& a, const CommMonomial& b);

struct GrlexGreater {
  bool operator()(const CommMonomial& a, const CommMonomial& b) const {
    return grlex_compare(a, b) > 0;
  }
};

// Sparse polynomial over one Field in commuting Variables. Terms are kept in
// descending graded-lex order; no zero coefficients are stored.
class CommPoly {
 public:
  using Terms = std::map<CommMonomial, Scalar, GrlexGreater>;

  // The zero polynomial over Q.
  CommPoly() : field_(Field::rationals()) {}
  explicit CommPoly(Field field) : field_(field) {}
  CommPoly(const Scalar& constant);  // NOLINT(google-explicit-constructor)
  CommPoly(Field field, Variable v);
  CommPoly(Field field, const CommMonomial& m, const Scalar& c);

  static CommPoly constant(Field field, long value) { return CommPoly(Scalar(field, value)); }
  static CommPoly variable(Field field, Variable v) { return CommPoly(field, v); }
  // Commutative expression in variable names (see Variable::parse).
  static CommPoly parse(std::string_view text, Field field);

  Field field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  Scalar constant_term() const;
  // Requires !is_zero().
  const CommMonomial& leading_monomial() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }
  // Total degree; -1 for zero.
  long degree() const;
  long degree_in(Variable v) const;
  std::set<Variable> variables() const;
  Scalar coefficient(const CommMonomial& m) const;

  CommPoly operator-() const;
  friend CommPoly operator+(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator-(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  CommPoly& operator+=(const CommPoly& b);
  CommPoly& operator-=(const CommPoly& b);
  CommPoly& operator*=(const CommPoly& b) { return *this = *this * b; }
  CommPoly scaled(const Scalar& c) const;
  CommPoly times_monomial(const CommMonomial& m, const Scalar& c) const;
  // Adds c*m in place.
  void add_term(const CommMonomial& m, const Scalar& c);
  CommPoly pow(unsigned e) const;

  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  // "x1*y1 - 1/2*x2^2 + 3"; "0" for zero.
  std::string to_string() const;

 private:
  void check_field(const CommPoly& other) const;

  Field field_;
  Terms terms_;
};

CommPoly partial_derivative(const CommPoly& a, Variable v);

// Throws UnassignedVariable if a variable of a has no value.
Scalar evaluate(const CommPoly& a, const std::map<Variable, Scalar>& point);

// Substitutes polynomials for variables; unmapped variables are kept.
CommPoly substitute(const CommPoly& a, const std::map<Variable, CommPoly>& images);

// Exact quotient a / b, or nullopt-like false when b does not divide a.
bool divide_exact(const CommPoly& a, const CommPoly& b, CommPoly& quotient);

// Monic greatest common divisor (leading graded-lex coefficient 1); gcd(0,0)=0.
CommPoly gcd(const CommPoly& a, const CommPoly& b);

std::ostream& operator<<(std::ostream& os, const CommPoly& p);

}  // namespace bergq
