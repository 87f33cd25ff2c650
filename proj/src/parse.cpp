#include "convfib/parse.hpp"

#include <cctype>
#include <string>

namespace convfib {

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := power (['*'] power)*        juxtaposition multiplies
// power  := atom ['^' integer]
// atom   := integer | 'h' | 'x' | '(' expr ')'
class Parser {
   public:
    explicit Parser(std::string_view s) : src_(s) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool starts_atom() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'h' || c == 'x' || c == '(';
    }

    Poly expr() {
        Poly acc;
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = src_[pos_++] == '-';
        acc = term();
        if (negate) acc = -acc;
        while (peek() == '+' || peek() == '-') {
            const bool minus = src_[pos_++] == '-';
            Poly rhs = term();
            if (minus) acc -= rhs;
            else acc += rhs;
        }
        return acc;
    }

    Poly term() {
        Poly acc = power();
        while (true) {
            if (peek() == '*') {
                ++pos_;
                acc *= power();
            } else if (starts_atom()) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    Poly power() {
        Poly base = atom();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        const BigInt e = integer();
        if (!e.fits_ulong_p() || e > 4096) fail("exponent too large");
        return pow(base, e.get_ui());
    }

    BigInt integer() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return BigInt(std::string(src_.substr(start, pos_ - start)), 10);
    }

    Poly atom() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(integer());
        if (c == 'h' || c == 'x') {
            ++pos_;
            return Poly::variable();
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace convfib
