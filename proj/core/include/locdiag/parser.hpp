#pragma once

#include <string_view>

#include "locdiag/formula.hpp"

namespace locdiag {

// Parses the ASCII surface syntax:
//
//   formula := impl
//   impl    := or ("->" impl)?          // right associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | "(" formula ")" | "false" | "true" | ATOM
//
// Whitespace is insignificant; "#" starts a comment that runs to end of
// line. Throws ParseError with a 1-based line/column on bad input.
Formula parse_formula(std::string_view text);

}  // namespace locdiag
