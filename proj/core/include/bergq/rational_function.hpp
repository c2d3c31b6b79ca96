#pragma once

#include <iosfwd>
#include <string>

#include "bergq/comm_poly.hpp"

namespace bergq {

// Quotient of two CommPolys in lowest terms: numerator and denominator are
// coprime and the denominator is monic (leading graded-lex coefficient 1).
// Zero is 0/1. Equality is therefore structural.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Scalar::one(Field::rationals())) {}
  explicit RationalFunction(Field field) : num_(field), den_(Scalar::one(field)) {}
  RationalFunction(const CommPoly& p);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Scalar& c) : RationalFunction(CommPoly(c)) {}  // NOLINT
  // Throws DivisionByZero if den is zero.
  RationalFunction(const CommPoly& num, const CommPoly& den);

  const CommPoly& numerator() const noexcept { return num_; }
  const CommPoly& denominator() const noexcept { return den_; }
  Field field() const noexcept { return num_.field(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  // "(num)/(den)", or just the numerator when den = 1.
  std::string to_string() const;

 private:
  CommPoly num_;
  CommPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

}  // namespace bergq
