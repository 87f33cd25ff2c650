#pragma once

#include <stdexcept>
#include <string_view>

#include "convfib/polynomial.hpp"

namespace convfib {

class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Parses an integer-coefficient expression in one symbol, written as
/// either "h" or "x": integers, + - * ^, parentheses, and juxtaposition
/// ("2h", "3(h+1)"). Exponents are nonnegative integer literals.
Poly parse_poly(std::string_view text);

}  // namespace convfib
