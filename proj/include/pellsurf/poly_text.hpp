#pragma once

#include <string_view>

#include "pellsurf/poly.hpp"

namespace pellsurf {

struct ParsedPoly {
  Poly poly;
  char var = 'u';  // the letter used in the text ('u' when none appears)
};

/// Parses terms `coef*VAR^k`, `VAR^k`, `VAR`, `coef` joined by `+`/`-`
/// (ASCII or U+2212). Coefficients are integers or `a/b`. Any single letter is
/// accepted as the variable, but only one per expression. Errors carry the
/// byte offset of the offending character.
ParsedPoly parse_poly(std::string_view text, Field field);

}  // namespace pellsurf
