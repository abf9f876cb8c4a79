#pragma once

#include "qlbkit/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qlbkit {

// Parses an exact coefficient expression: integers, declared variable names,
// + - * / ^ (integer exponents), unary minus and parentheses. Decimal points
// are rejected. Throws InputError with the offending position.
Scalar parse_scalar(std::string_view text, const std::vector<std::string>& variables = {});

}  // namespace qlbkit
