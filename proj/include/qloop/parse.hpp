#pragma once

#include "qloop/scalar.hpp"

#include <string_view>

namespace qloop {

// Arithmetic expressions over integers/rationals and the field generator:
// "q" in Q(q) (exponents may be fractions, "q^(1/3)"), "e" in Q(eps).
// Supports + - * / ^ and parentheses, e.g. "3*q^-2 + 1/2", "(1 + e)^2".
Scalar parse_scalar(std::string_view text, const Field& field);

}  // namespace qloop
