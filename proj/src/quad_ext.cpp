#include "convfib/quad_ext.hpp"

namespace convfib {

const Poly& QuadExt::discriminant() {
    static const Poly d = Poly::from({4, 0, 1});
    return d;
}

QuadExt operator*(const QuadExt& u, const QuadExt& v) {
    return {u.a * v.a + u.b * v.b * QuadExt::discriminant(), u.a * v.b + u.b * v.a};
}

QuadExt pow(QuadExt base, std::uint64_t k) {
    QuadExt result{Poly(1), Poly{}};
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

}  // namespace convfib
