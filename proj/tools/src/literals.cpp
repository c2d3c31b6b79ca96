#include "literals.hpp"

#include <string>

#include "bergq/error.hpp"

namespace bergq::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  raise(ErrorCode::Usage, "bad matrix literal '" + std::string(text) + "': " + why);
}

// Splits on `sep` outside brackets and parentheses.
std::vector<std::string_view> split_top(std::string_view s, char sep, std::string_view whole) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') {
      if (--depth < 0) bad(whole, "unbalanced brackets");
    }
    if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) bad(whole, "unbalanced brackets");
  out.push_back(trim(s.substr(start)));
  return out;
}

std::string_view unwrap(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') bad(whole, "expected [...]");
  return s.substr(1, s.size() - 2);
}

}  // namespace

PolyMatrix parse_matrix(std::string_view text, Field field) {
  const auto rows = split_top(unwrap(text, text), ',', text);
  const std::size_t n = rows.size();
  PolyMatrix m(n, n, CommPoly(field));
  for (std::size_t i = 0; i < n; ++i) {
    const auto entries = split_top(unwrap(rows[i], text), ',', text);
    if (entries.size() != n) bad(text, "matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (entries[j].empty()) bad(text, "empty entry");
      m(i, j) = CommPoly::parse(entries[j], field);
    }
  }
  return m;
}

std::vector<PolyMatrix> parse_series(std::string_view text, Field field) {
  std::vector<PolyMatrix> out;
  for (auto part : split_top(text, ';', text)) {
    out.push_back(parse_matrix(part, field));
    if (out.back().rows() != out.front().rows()) bad(text, "coefficients differ in size");
  }
  return out;
}

}  // namespace bergq::cli
