#pragma once

#include <string>
#include <string_view>

#include "liegauge/fraction.hpp"

namespace liegauge {

// Parses the textual expression grammar: integers, `/` for rationals, `z`,
// `t<i>` with a repeated `'` for the derivative order, `+ - * ^` and
// parentheses. Whitespace is insignificant. Throws ParseError on malformed
// input.
FieldElem parse_expr(std::string_view text);

// Parses a plain rational constant ("3", "-5/7").
Scalar parse_scalar(std::string_view text);

} // namespace liegauge
