#include "convfib/render.hpp"

#include <stdexcept>

namespace convfib {

namespace {

std::string monomial_text(const BigInt& magnitude, std::size_t degree, bool latex) {
    std::string out;
    if (degree == 0 || magnitude != 1) out = magnitude.get_str();
    if (degree >= 1) out += 'h';
    if (degree >= 2) {
        const std::string e = std::to_string(degree);
        out += '^';
        out += (latex && e.size() > 1) ? "{" + e + "}" : e;
    }
    return out;
}

std::string render(const Poly& p, bool latex) {
    auto c = p.coefficients();
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        const int sign = sgn(c[i]);
        if (sign == 0) continue;
        const BigInt magnitude = abs(c[i]);
        if (out.empty()) {
            if (sign < 0) out += '-';
        } else {
            out += sign < 0 ? " - " : " + ";
        }
        out += monomial_text(magnitude, i, latex);
    }
    return out;
}

std::size_t term_count(const Poly& p) {
    std::size_t n = 0;
    for (const auto& v : p.coefficients()) n += sgn(v) != 0;
    return n;
}

}  // namespace

std::string to_text(const Poly& p) { return render(p, false); }

std::string to_latex(const Poly& p) { return render(p, true); }

std::string to_text(const TPoly& p) {
    auto c = p.coefficients();
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t l = c.size(); l-- > 0;) {
        const Poly& coeff = c[l];
        if (coeff.is_zero()) continue;

        std::string power;
        if (l >= 1) power = "t";
        if (l >= 2) power += "^" + std::to_string(l);

        bool negative = false;
        std::string body;
        if (term_count(coeff) == 1) {
            negative = sgn(coeff.leading()) < 0;
            const Poly magnitude = negative ? -coeff : coeff;
            if (magnitude == Poly(1) && l >= 1) body = power;
            else body = to_text(magnitude) + (l >= 1 ? "*" + power : "");
        } else {
            negative = sgn(coeff.leading()) < 0;
            body = "(" + to_text(negative ? -coeff : coeff) + ")" + (l >= 1 ? "*" + power : "");
        }

        if (out.empty()) out = negative ? "-" + body : body;
        else out += (negative ? " - " : " + ") + body;
    }
    return out;
}

nlohmann::json to_json(const Poly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& v : p.coefficients()) arr.push_back(v.get_str());
    return arr;
}

nlohmann::json to_json(const TPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& v : p.coefficients()) arr.push_back(to_json(v));
    return arr;
}

nlohmann::json to_json(const Series& s) {
    auto arr = nlohmann::json::array();
    for (const auto& v : s.coefficients()) arr.push_back(to_json(v));
    return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<BigInt> c;
    c.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_string()) throw std::invalid_argument("polynomial coefficients must be decimal strings");
        BigInt v;
        if (v.set_str(entry.get<std::string>(), 10) != 0)
            throw std::invalid_argument("bad decimal coefficient: " + entry.get<std::string>());
        c.push_back(std::move(v));
    }
    Poly p(std::move(c));
    if (p.size() != j.size()) throw std::invalid_argument("polynomial JSON is not normalized");
    return p;
}

}  // namespace convfib
