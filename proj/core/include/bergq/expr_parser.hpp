#pragma once

// Recursive-descent parser for polynomial expressions, shared by the free
// and the commutative polynomial types.
//
//   expr    := term (("+" | "-") term)* ;
//   term    := signed (("*")? signed)* ;
//   signed  := ("-")? factor ;
//   factor  := atom ("^" NAT)? ;
//   atom    := IDENT | RATIONAL | "(" expr ")" ;
//   RATIONAL := NAT ("/" NAT)? ;
//
// Juxtaposition and "*" are both the (possibly noncommutative) product,
// evaluated left to right. A "-" following a complete factor is always the
// binary minus.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "bergq/error.hpp"

namespace bergq::detail {

template <class Poly, class AtomFn, class ConstFn>
class ExprParser {
 public:
  ExprParser(std::string_view text, AtomFn atom, ConstFn constant)
      : text_(text), atom_(atom), constant_(constant) {}

  Poly parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    Poly result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    raise(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ == text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::islower(static_cast<unsigned char>(c));
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = signed_factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * signed_factor();
      } else if (starts_atom()) {
        acc = acc * signed_factor();
      } else {
        return acc;
      }
    }
  }

  Poly signed_factor() {
    if (peek('-')) {
      ++pos_;
      return -factor();
    }
    return factor();
  }

  Poly factor() {
    Poly base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    std::string digits = read_digits();
    if (digits.empty()) fail("expected exponent");
    if (digits.size() > 6) fail("exponent too large");
    unsigned long e = std::stoul(digits);
    Poly result = constant_(std::string("1"));
    for (unsigned long k = 0; k < e; ++k) result = result * base;
    return result;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly atom() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = read_digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        literal += "/" + den;
      }
      return constant_(literal);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      return atom_(text_.substr(start, pos_ - start), start);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  AtomFn atom_;
  ConstFn constant_;
};

// atom(name, position) -> Poly; constant("a" or "a/b") -> Poly.
template <class Poly, class AtomFn, class ConstFn>
Poly parse_expression(std::string_view text, AtomFn atom, ConstFn constant) {
  return ExprParser<Poly, AtomFn, ConstFn>(text, atom, constant).parse();
}

}  // namespace bergq::detail
