#include "bergq/rational_function.hpp"

#include <ostream>

#include "bergq/error.hpp"

namespace bergq {

RationalFunction::RationalFunction(const CommPoly& p) : num_(p), den_(Scalar::one(p.field())) {}

RationalFunction::RationalFunction(const CommPoly& num, const CommPoly& den) {
  if (den.is_zero()) raise(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.field() != den.field()) raise(ErrorCode::FieldMismatch, "numerator and denominator fields differ");
  if (num.is_zero()) {
    num_ = CommPoly(num.field());
    den_ = CommPoly(Scalar::one(num.field()));
    return;
  }
  CommPoly g = gcd(num, den);
  CommPoly n, d;
  divide_exact(num, g, n);
  divide_exact(den, g, d);
  Scalar lc = d.leading_coefficient().inverse();
  num_ = n.scaled(lc);
  den_ = d.scaled(lc);
}

bool RationalFunction::is_one() const {
  return den_.is_constant() && num_ == den_;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -num_;
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.field());
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const CommPoly& p) {
    return p.size() == 1 && !p.leading_coefficient().prints_negative() ? p.to_string() : "(" + p.to_string() + ")";
  };
  // A single-term numerator needs no parentheses unless it is a fraction.
  const std::string num = num_.to_string();
  const bool bare = num_.size() == 1 && num.find('/') == std::string::npos;
  return (bare ? num : "(" + num + ")") + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

}  // namespace bergq
