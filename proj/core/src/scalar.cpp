#include "bergq/scalar.hpp"

#include <charconv>
#include <ostream>

#include "bergq/error.hpp"

namespace bergq {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnassignedVariable: return "UnassignedVariable";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::RepeatedEigenvalue: return "RepeatedEigenvalue";
    case ErrorCode::NonzeroDiagonalRHS: return "NonzeroDiagonalRHS";
    case ErrorCode::NotDiagonalLeadingTerm: return "NotDiagonalLeadingTerm";
    case ErrorCode::ScalarInput: return "ScalarInput";
    case ErrorCode::InvalidTensor: return "InvalidTensor";
    case ErrorCode::InvalidReport: return "InvalidReport";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p > (std::uint64_t{1} << 62)) {
    raise(ErrorCode::InvalidField, "modulus out of range: " + std::to_string(p));
  }
  mpz_class z(std::to_string(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    raise(ErrorCode::InvalidField, "modulus is not prime: " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.substr(0, 3) == "fp:") {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      raise(ErrorCode::InvalidField, "bad field descriptor '" + std::string(text) + "'");
    }
    return prime(p);
  }
  raise(ErrorCode::InvalidField, "bad field descriptor '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? "q" : "fp:" + std::to_string(p_);
}

namespace {

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void check_same(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) {
    raise(ErrorCode::FieldMismatch,
          "operands over " + a.field().to_string() + " and " + b.field().to_string());
  }
}

}  // namespace

Scalar::Scalar(Field field, long value) : Scalar(field, mpz_class(value)) {}

Scalar::Scalar(Field field, const mpz_class& value) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = Residue{reduce(value, field.characteristic()), field.characteristic()};
  }
}

Scalar::Scalar(Field field, const mpz_class& num, const mpz_class& den) {
  if (field.is_rational()) {
    if (den == 0) raise(ErrorCode::DivisionByZero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    const auto p = field.characteristic();
    auto d = reduce(den, p);
    if (d == 0) raise(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
    value_ = Residue{mulmod(reduce(num, p), powmod(d, p - 2, p), p), p};
  }
}

Scalar Scalar::parse(Field field, std::string_view text) {
  bool neg = false;
  if (!text.empty() && text.front() == '-') {
    neg = true;
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  auto digits_ok = [](std::string_view d) {
    if (d.empty()) return false;
    for (char c : d) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den)) {
    raise(ErrorCode::SyntaxError, "bad scalar literal '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (neg) n = -n;
  return Scalar(field, n, d);
}

Field Scalar::field() const {
  if (auto r = std::get_if<Residue>(&value_)) return Field(r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
  if (auto r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{powmod(r->value, r->p - 2, r->p), r->p});
  }
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (auto r = std::get_if<Scalar::Residue>(&a.value_)) {
    auto s = std::get<Scalar::Residue>(b.value_);
    std::uint64_t v = r->value + s.value;
    if (v >= r->p) v -= r->p;
    return Scalar(Scalar::Residue{v, r->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (auto r = std::get_if<Scalar::Residue>(&a.value_)) {
    auto s = std::get<Scalar::Residue>(b.value_);
    return Scalar(Scalar::Residue{mulmod(r->value, s.value, r->p), r->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&value_)) {
    if (r->value > r->p / 2) return "-" + std::to_string(r->p - r->value);
    return std::to_string(r->value);
  }
  return std::get<mpq_class>(value_).get_str();
}

bool Scalar::prints_negative() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value > r->p / 2;
  return sgn(std::get<mpq_class>(value_)) < 0;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, Field f) { return os << f.to_string(); }

}  // namespace bergq
