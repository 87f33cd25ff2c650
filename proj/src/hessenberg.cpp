#include "convfib/hessenberg.hpp"

#include "convfib/sequences.hpp"

namespace convfib {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_deletion_set(std::int64_t n, const std::vector<std::int64_t>& deleted) {
    std::int64_t last = 0;
    for (std::int64_t i : deleted) {
        if (i < 1 || i > n) throw IndexOutOfRange("deleted index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        if (i <= last) throw IndexOutOfRange("deleted indices must be strictly increasing");
        last = i;
    }
}

}  // namespace

HessMatrix<Poly> build_fib_matrix(std::int64_t n) {
    require(n >= 1, "build_fib_matrix: n must be >= 1");
    const auto size = static_cast<std::size_t>(n);
    std::vector<Poly> e(size * size);
    for (std::size_t i = 0; i < size; ++i) {
        e[i * size + i] = Poly::variable();
        if (i + 1 < size) {
            e[i * size + i + 1] = Poly(1);
            e[(i + 1) * size + i] = Poly(-1);
        }
    }
    return {size, std::move(e)};
}

Poly principal_minor(std::int64_t n, const std::vector<std::int64_t>& deleted) {
    require(n >= 1, "principal_minor: n must be >= 1");
    check_deletion_set(n, deleted);
    std::vector<std::size_t> keep;
    std::size_t d = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        if (d < deleted.size() && deleted[d] == i) {
            ++d;
            continue;
        }
        keep.push_back(static_cast<std::size_t>(i - 1));
    }
    return hess_det(build_fib_matrix(n).principal_submatrix(keep));
}

Poly principal_minor_product(std::int64_t n, const std::vector<std::int64_t>& deleted) {
    require(n >= 1, "principal_minor_product: n must be >= 1");
    check_deletion_set(n, deleted);
    if (deleted.empty()) return fib(n + 1);
    Poly out = fib(deleted.front());
    for (std::size_t k = 1; k < deleted.size(); ++k) out *= fib(deleted[k] - deleted[k - 1]);
    out *= fib(n - deleted.back() + 1);
    return out;
}

Poly sum_principal_minors(std::int64_t n, std::int64_t l) {
    require(n >= 1, "sum_principal_minors: n must be >= 1");
    require(l >= 0 && l <= n - 1, "sum_principal_minors: need 0 <= l <= n-1");
    const auto size = static_cast<std::size_t>(n);
    const auto pick = static_cast<std::size_t>(l);
    const HessMatrix<Poly> full = build_fib_matrix(n);

    // walk all l-subsets of {0..n-1} in lexicographic order
    std::vector<std::size_t> del(pick);
    for (std::size_t i = 0; i < pick; ++i) del[i] = i;
    Poly total;
    std::vector<std::size_t> keep;
    keep.reserve(size);
    while (true) {
        keep.clear();
        std::size_t d = 0;
        for (std::size_t i = 0; i < size; ++i) {
            if (d < pick && del[d] == i) ++d;
            else keep.push_back(i);
        }
        total += hess_det(full.principal_submatrix(keep));

        std::size_t k = pick;
        while (k > 0 && del[k - 1] == size - pick + k - 1) --k;
        if (k == 0) break;
        ++del[k - 1];
        for (std::size_t m = k; m < pick; ++m) del[m] = del[m - 1] + 1;
    }
    return total;
}

TPoly char_poly(std::int64_t n) {
    require(n >= 1, "char_poly: n must be >= 1");
    const auto size = static_cast<std::size_t>(n);
    // t - h on the diagonal, negated off-diagonals of build_fib_matrix
    const TPoly diag(std::vector<Poly>{-Poly::variable(), Poly(1)});
    std::vector<TPoly> e(size * size);
    for (std::size_t i = 0; i < size; ++i) {
        e[i * size + i] = diag;
        if (i + 1 < size) {
            e[i * size + i + 1] = TPoly(-1);
            e[(i + 1) * size + i] = TPoly(1);
        }
    }
    return hess_det(HessMatrix<TPoly>(size, std::move(e)));
}

Poly corollary9(std::int64_t n, std::int64_t l) {
    require(n >= 0, "corollary9: n must be >= 0");
    require(l >= 0 && l <= n, "corollary9: need 0 <= l <= n");
    std::vector<BigInt> c(static_cast<std::size_t>(n - l + 1));
    for (std::int64_t i = 0; i <= (n - l) / 2; ++i)
        c[static_cast<std::size_t>(n - 2 * i - l)] = binomial(n - i, i) * binomial(n - 2 * i, l);
    return Poly(std::move(c));
}

std::pair<TPoly, TPoly> classical_fib_shift_identity(std::int64_t n) {
    require(n >= 1, "classical_fib_shift_identity: n must be >= 1");
    const TPoly shifted(std::vector<Poly>{-Poly::variable(), Poly(1)});
    TPoly expansion;
    for (std::int64_t i = 0; i <= n / 2; ++i) {
        TPoly term = pow(shifted, static_cast<std::uint64_t>(n - 2 * i));
        term.scale(Poly(binomial(n - i, i)));
        expansion += term;
    }
    return {char_poly(n), std::move(expansion)};
}

}  // namespace convfib
