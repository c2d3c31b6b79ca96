#include "bergq/free_poly.hpp"

#include <charconv>
#include <ostream>

#include "bergq/error.hpp"
#include "bergq/expr_parser.hpp"

namespace bergq {

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t k = 0;
  while (k < w.size()) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(w[k]);
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

FreePoly FreePoly::constant(Field field, std::size_t generators, const Scalar& c) {
  return monomial(field, generators, Word{}, c);
}

FreePoly FreePoly::generator(Field field, std::size_t generators, std::uint32_t index) {
  if (index == 0 || index > generators) {
    raise(ErrorCode::UnknownGenerator,
          "x" + std::to_string(index) + " with s=" + std::to_string(generators));
  }
  return monomial(field, generators, Word{index}, Scalar::one(field));
}

FreePoly FreePoly::monomial(Field field, std::size_t generators, const Word& w, const Scalar& c) {
  FreePoly p(field, generators);
  if (c.field() != field) raise(ErrorCode::FieldMismatch, "coefficient over " + c.field().to_string());
  p.add_term(w, c);
  return p;
}

FreePoly FreePoly::parse(std::string_view text, std::size_t generators, Field field) {
  auto atom = [&](std::string_view name, std::size_t pos) {
    std::uint32_t index = 0;
    auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (name.size() < 2 || name[0] != 'x' || ec != std::errc() || ptr != digits.data() + digits.size()) {
      raise(ErrorCode::SyntaxError,
            "expected generator x<k>, got '" + std::string(name) + "' at position " + std::to_string(pos));
    }
    if (index == 0 || index > generators) {
      raise(ErrorCode::UnknownGenerator, "'" + std::string(name) + "' at position " + std::to_string(pos) +
                                             " (s=" + std::to_string(generators) + ")");
    }
    return generator(field, generators, index);
  };
  auto constant_fn = [&](const std::string& literal) {
    return constant(field, generators, Scalar::parse(field, literal));
  };
  return detail::parse_expression<FreePoly>(text, atom, constant_fn);
}

bool FreePoly::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Degree FreePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.size();
}

Scalar FreePoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
  for (auto letter : w) {
    if (letter == 0 || letter > s_) raise(ErrorCode::UnknownGenerator, "letter x" + std::to_string(letter));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FreePoly::check_compatible(const FreePoly& b) const {
  if (field_ != b.field_) {
    raise(ErrorCode::FieldMismatch, "free polynomials over " + field_.to_string() + " and " + b.field_.to_string());
  }
  if (s_ != b.s_) {
    raise(ErrorCode::FieldMismatch, "free polynomials in " + std::to_string(s_) + " and " + std::to_string(b.s_) +
                                        " generators");
  }
}

FreePoly FreePoly::operator-() const {
  FreePoly out(field_, s_);
  for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, -c);
  return out;
}

FreePoly& FreePoly::operator+=(const FreePoly& b) {
  check_compatible(b);
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& b) {
  check_compatible(b);
  for (const auto& [w, c] : b.terms_) add_term(w, -c);
  return *this;
}

FreePoly operator+(const FreePoly& a, const FreePoly& b) {
  FreePoly out = a;
  out += b;
  return out;
}

FreePoly operator-(const FreePoly& a, const FreePoly& b) {
  FreePoly out = a;
  out -= b;
  return out;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  a.check_compatible(b);
  FreePoly out(a.field_, a.s_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

FreePoly FreePoly::scaled(const Scalar& c) const {
  FreePoly out(field_, s_);
  if (c.is_zero()) return out;
  for (const auto& [w, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, k * c);
  return out;
}

FreePoly FreePoly::pow(unsigned e) const {
  FreePoly result = constant(field_, s_, Scalar::one(field_));
  for (unsigned k = 0; k < e; ++k) result = result * *this;
  return result;
}

std::string FreePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    bool neg = c.prints_negative();
    Scalar mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += word_to_string(w);
    } else {
      out += mag.to_string() + "*" + word_to_string(w);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FreePoly& p) { return os << p.to_string(); }

FreePoly commutator(const FreePoly& a, const FreePoly& b) { return a * b - b * a; }

FreePoly homogeneous_component(const FreePoly& a, std::size_t m) {
  FreePoly out(a.field(), a.generators());
  for (const auto& [w, c] : a.terms()) {
    if (w.size() == m) out.add_term(w, c);
  }
  return out;
}

}  // namespace bergq
