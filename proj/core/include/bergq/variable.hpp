#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace bergq {

// A commuting indeterminate. Either the (i,j) entry of the l-th generic
// matrix, rendered "x<l>_<i>_<j>", or an auxiliary symbol (name, index)
// rendered "<name><index>" (index 0 renders as the bare name).
//
// Auxiliary names are 1..8 lowercase ASCII letters; they are packed into an
// integer so that comparison is a pair of integer compares. The total order
// is: matrix entries before auxiliaries, then (l, i, j) or (name, index)
// lexicographically.
class Variable {
 public:
  enum class Kind : std::uint8_t { MatrixEntry = 0, Auxiliary = 1 };

  static Variable entry(unsigned generator, unsigned row, unsigned col);
  static Variable aux(std::string_view name, std::uint32_t index = 0);
  // Inverse of to_string(). Throws SyntaxError.
  static Variable parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  // Matrix-entry accessors (1-based).
  unsigned generator() const noexcept { return static_cast<unsigned>(hi_ >> 32); }
  unsigned row() const noexcept { return static_cast<unsigned>((hi_ >> 16) & 0xffff); }
  unsigned col() const noexcept { return static_cast<unsigned>(hi_ & 0xffff); }
  // Auxiliary accessors.
  std::string name() const;
  std::uint32_t index() const noexcept { return lo_; }

  std::string to_string() const;

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;

 private:
  Variable(Kind k, std::uint64_t hi, std::uint32_t lo) : kind_(k), hi_(hi), lo_(lo) {}

  Kind kind_;
  std::uint64_t hi_;
  std::uint32_t lo_;
};

}  // namespace bergq
