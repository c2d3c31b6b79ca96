#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace bergq {

// Ground field descriptor: the rationals, or Z/pZ for a prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws InvalidField unless p is prime.
  static Field prime(std::uint64_t p);
  // "q" or "fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  // 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(Field, Field) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

// Exact element of a Field. Rationals are kept in lowest terms with a
// positive denominator; residues are kept in [0, p).
class Scalar {
 public:
  // Zero of Q.
  Scalar() : value_(mpq_class(0)) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpz_class& value);
  // Rational num/den, reduced into field. Throws DivisionByZero if den maps to 0.
  Scalar(Field field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }
  // Parses "a" or "a/b" with optional leading '-'.
  static Scalar parse(Field field, std::string_view text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  // Residue representative for prime fields, numerator/denominator for Q.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<Residue>(value_).value; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  // "3/2", "-1", "5". Prime-field residues print in the symmetric range
  // (-p/2, p/2] so that p-1 renders as "-1".
  std::string to_string() const;
  // True when to_string() starts with '-'.
  bool prints_negative() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, Field f);

}  // namespace bergq
