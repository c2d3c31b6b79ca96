#pragma once

// Bracketed matrix literals on the command line:
//   matrix  "[[x1, 0], [0, x2]]"
//   series  "[[l1, 0], [0, l2]]; [[0, 1], [1, 0]]"   (coefficients of h^0, h^1, ...)
// Entries are commutative polynomial expressions.

#include <string_view>
#include <vector>

#include "bergq/generic_matrix.hpp"

namespace bergq::cli {

// Throws Error(Usage) on malformed brackets or non-square input.
PolyMatrix parse_matrix(std::string_view text, Field field);
std::vector<PolyMatrix> parse_series(std::string_view text, Field field);

}  // namespace bergq::cli
