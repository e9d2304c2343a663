#pragma once

#include <span>
#include <string>
#include <string_view>

#include "monadlab/polynomial.hpp"

namespace monadlab {

/// Parses an expression built from integer literals, the declared variable
/// names, + - * ^ and parentheses. Division is accepted only by a nonzero
/// constant, so that rational coefficients written by to_string read back.
/// Whitespace is insignificant. Throws ParseError with the offending offset.
Polynomial parse_polynomial(std::string_view text, const Ring& ring, std::span<const std::string> names);

}  // namespace monadlab
