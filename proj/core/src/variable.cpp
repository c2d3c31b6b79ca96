#include "bergq/variable.hpp"

#include <charconv>

#include "bergq/error.hpp"

namespace bergq {

Variable Variable::entry(unsigned generator, unsigned row, unsigned col) {
  if (generator == 0 || row == 0 || col == 0 || row > 0xffff || col > 0xffff) {
    raise(ErrorCode::InvalidSize, "matrix-entry variable indices are 1-based and < 65536");
  }
  std::uint64_t hi = (std::uint64_t{generator} << 32) | (std::uint64_t{row} << 16) | col;
  return Variable(Kind::MatrixEntry, hi, 0);
}

Variable Variable::aux(std::string_view name, std::uint32_t index) {
  if (name.empty() || name.size() > 8) {
    raise(ErrorCode::SyntaxError, "auxiliary variable name must have 1..8 letters: '" + std::string(name) + "'");
  }
  std::uint64_t hi = 0;
  for (std::size_t k = 0; k < 8; ++k) {
    unsigned char c = k < name.size() ? static_cast<unsigned char>(name[k]) : 0;
    if (k < name.size() && (c < 'a' || c > 'z')) {
      raise(ErrorCode::SyntaxError, "auxiliary variable name must be lowercase letters: '" + std::string(name) + "'");
    }
    hi = (hi << 8) | c;
  }
  return Variable(Kind::Auxiliary, hi, index);
}

namespace {

bool parse_uint(std::string_view s, unsigned& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Variable Variable::parse(std::string_view text) {
  std::size_t k = 0;
  while (k < text.size() && text[k] >= 'a' && text[k] <= 'z') ++k;
  std::string_view name = text.substr(0, k);
  std::string_view rest = text.substr(k);
  if (name.empty()) raise(ErrorCode::SyntaxError, "bad variable '" + std::string(text) + "'");
  auto u1 = rest.find('_');
  if (u1 != std::string_view::npos) {
    auto u2 = rest.find('_', u1 + 1);
    unsigned l = 0, i = 0, j = 0;
    if (name != "x" || u2 == std::string_view::npos || !parse_uint(rest.substr(0, u1), l) ||
        !parse_uint(rest.substr(u1 + 1, u2 - u1 - 1), i) || !parse_uint(rest.substr(u2 + 1), j)) {
      raise(ErrorCode::SyntaxError, "bad matrix-entry variable '" + std::string(text) + "'");
    }
    return entry(l, i, j);
  }
  unsigned index = 0;
  if (!rest.empty() && !parse_uint(rest, index)) {
    raise(ErrorCode::SyntaxError, "bad variable '" + std::string(text) + "'");
  }
  return aux(name, index);
}

std::string Variable::name() const {
  std::string out;
  for (int k = 7; k >= 0; --k) {
    char c = static_cast<char>((hi_ >> (8 * k)) & 0xff);
    if (c) out.push_back(c);
  }
  return out;
}

std::string Variable::to_string() const {
  if (kind_ == Kind::MatrixEntry) {
    return "x" + std::to_string(generator()) + "_" + std::to_string(row()) + "_" + std::to_string(col());
  }
  return lo_ == 0 ? name() : name() + std::to_string(lo_);
}

}  // namespace bergq
