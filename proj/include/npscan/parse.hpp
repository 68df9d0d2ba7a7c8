#pragma once

#include <string>

#include "npscan/rational_poly.hpp"

namespace npscan {

/// Either a coefficient list "c0,c1,...,cd" of rationals (ascending degree)
/// or an expression over x with integers, + - * ^, parentheses and
/// dickson(n, a). Throws ParseError.
QPoly parse_polynomial(const std::string& text);

}  // namespace npscan
