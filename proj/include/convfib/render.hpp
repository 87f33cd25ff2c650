#pragma once

#include <string>

#include <json.hpp>

#include "convfib/hessenberg.hpp"
#include "convfib/polynomial.hpp"
#include "convfib/series.hpp"

namespace convfib {

/// Canonical text: decreasing degree, symbol "h", unit coefficients
/// omitted ("h^3 + 2h", "-h^2 + 1", "0").
std::string to_text(const Poly& p);

/// Same layout as to_text but with braced exponents past one digit (h^{10}).
std::string to_latex(const Poly& p);

/// Polynomial in t: "t^2 - 2h*t + (h^2 + 1)". Multi-term coefficients are
/// parenthesized; the sign of each coefficient's leading term goes outside.
std::string to_text(const TPoly& p);

/// Array of decimal coefficient strings, index = degree; zero is [].
nlohmann::json to_json(const Poly& p);
/// Array of Poly renderings, index = power of t.
nlohmann::json to_json(const TPoly& p);
nlohmann::json to_json(const Series& s);

/// Inverse of to_json(const Poly&). Throws std::invalid_argument on malformed input.
Poly poly_from_json(const nlohmann::json& j);

}  // namespace convfib
