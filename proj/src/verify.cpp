#include "convfib/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>

#include "convfib/hessenberg.hpp"
#include "convfib/oracles.hpp"
#include "convfib/quad_ext.hpp"
#include "convfib/render.hpp"
#include "convfib/sequences.hpp"
#include "convfib/series.hpp"

namespace convfib {

namespace {

using Clock = std::chrono::steady_clock;

void perturb(Poly& v) { v += Poly(1); }
void perturb(TPoly& v) { v += TPoly(1); }
void perturb(QuadExt& v) { v.a += Poly(1); }
void perturb(BigInt& v) { v += 1; }

std::string describe(const Poly& v) { return to_text(v); }
std::string describe(const TPoly& v) { return to_text(v); }
std::string describe(const QuadExt& v) { return "(" + to_text(v.a) + ") + (" + to_text(v.b) + ")*s"; }
std::string describe(const BigInt& v) { return v.get_str(); }

/// Collects comparisons for one check and keeps the first mismatch.
class Recorder {
   public:
    Recorder(std::string id, const CheckOptions& options) : start_(Clock::now()), corrupt_(options.corrupt_first) {
        result_.check_id = std::move(id);
    }

    void param(const std::string& name, std::int64_t value) { result_.params[name] = value; }

    template <class T>
    bool equal(T lhs, const T& rhs, const std::string& where) {
        ++instances_;
        if (corrupt_) {
            corrupt_ = false;
            perturb(lhs);
        }
        if (lhs == rhs) return true;
        if (result_.passed) {
            result_.passed = false;
            result_.counterexample = where + ": lhs = " + describe(lhs) + "; rhs = " + describe(rhs);
        }
        return false;
    }

    CheckResult finish() {
        result_.params["instances"] = instances_;
        if (instances_ == 0) result_.params["skipped"] = 1;
        result_.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
        return std::move(result_);
    }

   private:
    CheckResult result_;
    Clock::time_point start_;
    bool corrupt_;
    std::int64_t instances_ = 0;
};

std::string at(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) out += ' ';
        out += std::string(k) + "=" + std::to_string(v);
    }
    return out;
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(salt)};
    return std::mt19937_64(seq);
}

Poly random_poly(std::mt19937_64& rng, std::size_t max_degree, long bound) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::vector<BigInt> c(deg(rng) + 1);
    for (auto& v : c) v = coeff(rng);
    return Poly(std::move(c));
}

Series random_invertible_series(std::mt19937_64& rng, std::size_t order) {
    std::vector<Poly> c(order);
    c[0] = Poly(std::bernoulli_distribution(0.5)(rng) ? 1 : -1);
    for (std::size_t i = 1; i < order; ++i) c[i] = random_poly(rng, 3, 5);
    return Series(order, std::move(c));
}

}  // namespace

namespace checks {

CheckResult ring_axioms(std::uint64_t seed, int cases, const CheckOptions& options) {
    Recorder rec("ring_axioms", options);
    rec.param("cases", cases);
    rec.param("seed", static_cast<std::int64_t>(seed));
    auto rng = make_rng(seed, 1);
    const Poly h = Poly::variable();
    const BigInt one = 1;
    for (int c = 0; c < cases; ++c) {
        const Poly p = random_poly(rng, 12, 1'000'000);
        const Poly q = random_poly(rng, 12, 1'000'000);
        const Poly r = random_poly(rng, 12, 1'000'000);
        const std::string where = at({{"case", c}});
        rec.equal((p + q) + r, p + (q + r), where + " add-assoc");
        rec.equal(p + q, q + p, where + " add-comm");
        rec.equal((p * q) * r, p * (q * r), where + " mul-assoc");
        rec.equal(p * q, q * p, where + " mul-comm");
        rec.equal(p * (q + r), p * q + p * r, where + " distrib");
        rec.equal(p + Poly{}, p, where + " add-identity");
        rec.equal(p * Poly(1), p, where + " mul-identity");
        rec.equal(p - p, Poly{}, where + " cancel");
        if (!q.is_zero()) rec.equal(exact_div(p * q, q), p, where + " exact-div");
        rec.equal(compose(p, h), p, where + " compose-identity");
        for (const Poly* v : {&p, &q, &r}) {
            const bool normalized = v->is_zero() || sgn(v->leading()) != 0;
            rec.equal(BigInt(normalized ? 1 : 0), one, where + " normalized");
        }
    }
    return rec.finish();
}

CheckResult quad_pow(std::uint64_t seed, int cases, const CheckOptions& options) {
    Recorder rec("quad_pow", options);
    rec.param("cases", cases);
    rec.param("seed", static_cast<std::int64_t>(seed));
    auto rng = make_rng(seed, 2);
    std::uniform_int_distribution<int> exp(0, 6);
    for (int c = 0; c < cases; ++c) {
        const QuadExt u{random_poly(rng, 3, 5), random_poly(rng, 3, 5)};
        const int a = exp(rng);
        const int b = exp(rng);
        rec.equal(pow(u, a + b), pow(u, a) * pow(u, b), at({{"case", c}, {"a", a}, {"b", b}}));
    }
    return rec.finish();
}

CheckResult series_laws(std::uint64_t seed, int cases, const CheckOptions& options) {
    Recorder rec("series_laws", options);
    rec.param("cases", cases);
    rec.param("seed", static_cast<std::int64_t>(seed));
    auto rng = make_rng(seed, 3);
    std::uniform_int_distribution<std::size_t> order_dist(1, 32);
    std::uniform_int_distribution<int> exp(-3, 3);
    for (int c = 0; c < cases; ++c) {
        const std::size_t order = order_dist(rng);
        const Series a = random_invertible_series(rng, order);
        const Series b = random_invertible_series(rng, order);
        const std::string where = at({{"case", c}, {"order", static_cast<std::int64_t>(order)}});

        const Series prod = a * inverse(a);
        for (std::size_t i = 0; i < order; ++i)
            rec.equal(prod[i], Series::unit(order)[i], where + " inverse t^" + std::to_string(i));

        const int j = exp(rng);
        const int k = exp(rng);
        const Series lhs = pow(a, j + k);
        const Series rhs = pow(a, j) * pow(a, k);
        for (std::size_t i = 0; i < order; ++i)
            rec.equal(lhs[i], rhs[i], where + " pow j=" + std::to_string(j) + " k=" + std::to_string(k) + " t^" + std::to_string(i));

        const Series dl = derivative(a * b);
        const Series dr = derivative(a) * b + a * derivative(b);
        for (std::size_t i = 0; i + 1 < order; ++i) rec.equal(dl[i], dr[i], where + " leibniz t^" + std::to_string(i));
    }

    // d/dt (1-ht-t^2)^-r = r (h + 2t) (1-ht-t^2)^-(r+1)
    constexpr std::size_t order = 12;
    const Series denom = fibonacci_denominator(order);
    const Series h_plus_2t(order, {Poly::variable(), Poly(2)});
    for (std::int64_t r = 1; r <= 3; ++r) {
        const Series lhs = derivative(pow(denom, -r));
        Series rhs = h_plus_2t * pow(denom, -(r + 1));
        for (std::size_t i = 0; i + 1 < order; ++i)
            rec.equal(lhs[i], Poly(static_cast<long>(r)) * rhs[i], at({{"r", r}, {"t_power", static_cast<std::int64_t>(i)}}) + " gf-derivative");
    }
    return rec.finish();
}

CheckResult gf_fib(std::int64_t n_terms, const CheckOptions& options) {
    Recorder rec("gf_fib", options);
    rec.param("n_terms", n_terms);
    if (n_terms >= 1) {
        const auto gf = gf_convolved(1, static_cast<std::size_t>(n_terms));
        for (std::int64_t j = 0; j < n_terms; ++j) rec.equal(gf[static_cast<std::size_t>(j)], fib(j + 1), at({{"j", j}}));
    }
    return rec.finish();
}

CheckResult binet(std::int64_t n_max, const CheckOptions& options) {
    Recorder rec("binet", options);
    rec.param("n_max", n_max);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto [diff, sum] = binet_scaled(n);
        const Poly scale = pow(Poly(2), static_cast<std::uint64_t>(n));
        rec.equal(diff, QuadExt{Poly{}, scale * fib(n)}, at({{"n", n}}) + " fibonacci");
        rec.equal(sum, QuadExt{scale * lucas(n), Poly{}}, at({{"n", n}}) + " lucas");
    }
    return rec.finish();
}

CheckResult lucas_relation(std::int64_t n_max, const CheckOptions& options) {
    Recorder rec("lucas_relation", options);
    rec.param("n_max", n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) rec.equal(lucas(n), fib(n - 1) + fib(n + 1), at({{"n", n}}));
    return rec.finish();
}

CheckResult fib_combinatorial(std::int64_t n_max, const CheckOptions& options) {
    Recorder rec("fib_combinatorial", options);
    rec.param("n_max", n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) rec.equal(fib(n), convfib::fib_combinatorial(n), at({{"n", n}}));
    return rec.finish();
}

CheckResult five_way(std::int64_t r_max, std::int64_t j_max, std::int64_t hess_cap, const CheckOptions& options) {
    Recorder rec("five_way", options);
    rec.param("r_max", r_max);
    rec.param("j_max", j_max);
    rec.param("hess_cap", hess_cap);
    if (j_max < 0) return rec.finish();
    for (std::int64_t r = 1; r <= r_max; ++r) {
        const auto conv = convolved_conv_prefix(r, j_max);
        const auto recur = convolved_rec_prefix(r, j_max + 1);
        const auto gf = gf_convolved(r, static_cast<std::size_t>(j_max + 1));
        for (std::int64_t j = 0; j <= j_max; ++j) {
            const auto idx = static_cast<std::size_t>(j);
            const Poly gould = convolved_gould(r, j);
            const std::string where = at({{"r", r}, {"j", j}});
            rec.equal(conv[idx], gould, where + " convolution");
            rec.equal(recur[idx + 1], gould, where + " recurrence");
            rec.equal(gf[idx], gould, where + " generating-function");
            // minor sums of F_n with n = j + r - 1, deleting l = r - 1 indices
            const std::int64_t n = j + r - 1;
            if (j >= 1 && n <= hess_cap) rec.equal(sum_principal_minors(n, r - 1), gould, where + " hessenberg");
        }
    }
    return rec.finish();
}

CheckResult conv_brute(std::int64_t r_max, std::int64_t m_max, const CheckOptions& options) {
    Recorder rec("conv_brute", options);
    rec.param("r_max", r_max);
    rec.param("m_max", m_max);
    for (std::int64_t r = 1; r <= r_max; ++r) {
        if (m_max < 0) break;
        const auto conv = convolved_conv_prefix(r, m_max);
        for (std::int64_t m = 0; m <= m_max; ++m)
            rec.equal(conv[static_cast<std::size_t>(m)], oracle::composition_sum(r, m), at({{"r", r}, {"m", m}}));
    }
    return rec.finish();
}

CheckResult thm4_1(std::int64_t r_max, const CheckOptions& options) {
    Recorder rec("thm4_1", options);
    rec.param("r_max", r_max);
    for (std::int64_t r = 1; r <= r_max; ++r)
        rec.equal(convolved_gould(r, 1), Poly::monomial(BigInt(static_cast<long>(r)), 1), at({{"r", r}}));
    return rec.finish();
}

CheckResult thm4_3(std::int64_t r_max, std::int64_t n_max, const CheckOptions& options) {
    Recorder rec("thm4_3", options);
    rec.param("r_max", r_max);
    rec.param("n_max", n_max);
    for (std::int64_t r = 1; r <= r_max; ++r)
        for (std::int64_t n = 1; n <= n_max; ++n) {
            auto [lhs, rhs] = theorem4_3_sides(r, n);
            rec.equal(std::move(lhs), rhs, at({{"r", r}, {"n", n}}));
        }
    return rec.finish();
}

CheckResult thm5(std::int64_t r_max, std::int64_t j_max, const CheckOptions& options) {
    Recorder rec("thm5", options);
    rec.param("r_max", r_max);
    rec.param("j_max", j_max);
    for (std::int64_t r = 1; r <= r_max; ++r)
        for (std::int64_t j = 0; j <= j_max; ++j) {
            auto [lhs, rhs] = theorem5_sides(r, j);
            rec.equal(std::move(lhs), rhs, at({{"r", r}, {"j", j}}));
        }
    return rec.finish();
}

CheckResult degree_parity(std::int64_t r_max, std::int64_t j_max, const CheckOptions& options) {
    Recorder rec("degree_parity", options);
    rec.param("r_max", r_max);
    rec.param("j_max", j_max);
    for (std::int64_t r = 1; r <= r_max; ++r)
        for (std::int64_t j = 0; j <= j_max; ++j) {
            const Poly p = convolved_gould(r, j);
            const std::string where = at({{"r", r}, {"j", j}});
            const auto deg = p.degree();
            rec.equal(BigInt(deg ? static_cast<long>(*deg) : -1L), BigInt(static_cast<long>(j)), where + " degree");
            if (!deg) continue;
            rec.equal(p.leading(), binomial(j + r - 1, j), where + " leading");
            // zero out the admissible parity; nothing may remain
            std::vector<BigInt> wrong(p.coefficients().begin(), p.coefficients().end());
            for (std::size_t i = static_cast<std::size_t>(j % 2); i < wrong.size(); i += 2) wrong[i] = 0;
            rec.equal(Poly(std::move(wrong)), Poly{}, where + " parity");
        }
    return rec.finish();
}

CheckResult specialization(std::int64_t n_max, const CheckOptions& options) {
    Recorder rec("specialization", options);
    rec.param("n_max", n_max);
    if (n_max < 0) return rec.finish();
    const auto count = static_cast<std::size_t>(n_max + 1);
    const auto fibonacci = oracle::integer_fibonacci(1, count + 1);
    const auto pell = oracle::integer_fibonacci(2, count);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto idx = static_cast<std::size_t>(n);
        rec.equal(evaluate(fib(n), 1), fibonacci[idx], at({{"h", 1}, {"n", n}}));
        rec.equal(evaluate(fib(n), 2), pell[idx], at({{"h", 2}, {"n", n}}));
    }
    // (F_1, F_2, ...) at h = 1, convolved with itself
    const auto conv = oracle::self_convolution(std::vector<BigInt>(fibonacci.begin() + 1, fibonacci.end()));
    for (std::int64_t j = 0; j <= n_max; ++j)
        rec.equal(evaluate(convolved_gould(2, j), 1), conv[static_cast<std::size_t>(j)], at({{"h", 1}, {"r", 2}, {"j", j}}));
    return rec.finish();
}

CheckResult eq14(std::int64_t n_max, const CheckOptions& options) {
    Recorder rec("eq14", options);
    rec.param("n_max", n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) rec.equal(hess_det(build_fib_matrix(n)), fib(n + 1), at({{"n", n}}));
    return rec.finish();
}

CheckResult eq15(std::int64_t n_max, const CheckOptions& options) {
    Recorder rec("eq15", options);
    rec.param("n_max", n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::int64_t> deleted;
            for (std::int64_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t{1} << i)) deleted.push_back(i + 1);
            rec.equal(principal_minor(n, deleted), principal_minor_product(n, deleted),
                      at({{"n", n}, {"mask", static_cast<std::int64_t>(mask)}}));
        }
    }
    return rec.finish();
}

CheckResult thm6(std::uint64_t seed, int instances, const CheckOptions& options) {
    Recorder rec("thm6", options);
    rec.param("instances_requested", instances);
    rec.param("seed", static_cast<std::int64_t>(seed));
    auto rng = make_rng(seed, 4);
    std::uniform_int_distribution<std::size_t> size_dist(1, 6);
    std::uniform_int_distribution<long> entry(-3, 3);

    auto run = [&](int c, const BigInt& a1) {
        const std::size_t n = size_dist(rng);
        std::vector<std::vector<long>> w(n, std::vector<long>(n, 0));
        std::vector<BigInt> e(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                w[i][j] = entry(rng);
                e[i * n + j] = w[i][j];
            }
        for (std::size_t i = 0; i + 1 < n; ++i) e[(i + 1) * n + i] = -1;
        const BigInt det = hess_det(HessMatrix<BigInt>(n, std::move(e)));
        rec.equal(BigInt(a1 * det), oracle::hessenberg_recurrence(w, a1),
                  at({{"case", c}, {"n", static_cast<std::int64_t>(n)}, {"a1", a1.get_si()}}));
    };
    for (int c = 0; c < instances; ++c) run(c, 1);
    run(instances, 3);
    return rec.finish();
}

CheckResult hess_cofactor(std::uint64_t seed, const CheckOptions& options) {
    Recorder rec("hess_cofactor", options);
    rec.param("seed", static_cast<std::int64_t>(seed));
    auto to_dense = [](const HessMatrix<Poly>& m) {
        oracle::DenseMatrix d(m.size(), std::vector<Poly>(m.size()));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) d[i][j] = m(i, j);
        return d;
    };
    for (std::int64_t n = 1; n <= 5; ++n) {
        const auto m = build_fib_matrix(n);
        rec.equal(hess_det(m), oracle::cofactor_det(to_dense(m)), at({{"fib_matrix_n", n}}));
    }
    auto rng = make_rng(seed, 5);
    std::uniform_int_distribution<std::size_t> size_dist(1, 5);
    for (int c = 0; c < 20; ++c) {
        const std::size_t n = size_dist(rng);
        std::vector<Poly> e(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i <= j + 1) e[i * n + j] = random_poly(rng, 2, 3);
        const HessMatrix<Poly> m(n, std::move(e));
        rec.equal(hess_det(m), oracle::cofactor_det(to_dense(m)), at({{"case", c}, {"n", static_cast<std::int64_t>(n)}}));
    }
    return rec.finish();
}

CheckResult thm7(std::int64_t n_max, const CheckOptions& options) {
    Recorder rec("thm7", options);
    rec.param("n_max", n_max);
    for (std::int64_t n = 1; n <= n_max; ++n)
        for (std::int64_t l = 0; l < n; ++l)
            rec.equal(sum_principal_minors(n, l), convolved_gould(l + 1, n - l), at({{"n", n}, {"l", l}}));
    return rec.finish();
}

CheckResult cor8(std::int64_t n_max, const CheckOptions& options) {
    Recorder rec("cor8", options);
    rec.param("n_max", n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const TPoly p = char_poly(n);
        for (std::int64_t l = 0; l <= n; ++l) {
            Poly expected = convolved(l + 1, n - l + 1);
            if ((n - l) % 2 != 0) expected = -expected;
            rec.equal(p.coefficient(static_cast<std::size_t>(l)), expected, at({{"n", n}, {"l", l}}));
        }
    }
    return rec.finish();
}

CheckResult cor9(std::int64_t n_max, const CheckOptions& options) {
    Recorder rec("cor9", options);
    rec.param("n_max", n_max);
    for (std::int64_t n = 0; n <= n_max; ++n)
        for (std::int64_t l = 0; l <= n; ++l)
            rec.equal(corollary9(n, l), convolved_gould(l + 1, n - l), at({{"n", n}, {"l", l}}));
    return rec.finish();
}

CheckResult charpoly_shift(std::int64_t n_max, const CheckOptions& options) {
    Recorder rec("charpoly_shift", options);
    rec.param("n_max", n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        auto [p, shifted] = classical_fib_shift_identity(n);
        const std::string where = at({{"n", n}});
        rec.equal(BigInt(static_cast<long>(p.degree().value_or(0))), BigInt(static_cast<long>(n)), where + " degree");
        rec.equal(p.is_zero() ? Poly{} : p.leading(), Poly(1), where + " monic");
        rec.equal(std::move(p), shifted, where + " shift");
    }
    return rec.finish();
}

}  // namespace checks

SuiteReport run_suite(std::int64_t r_max, std::int64_t n_max, std::uint64_t seed, const SuiteOptions& options) {
    if (r_max < 1) throw std::invalid_argument("run_suite: r_max must be >= 1");
    if (n_max < 2) throw std::invalid_argument("run_suite: n_max must be >= 2");

    SuiteReport report;
    report.bounds = {r_max, n_max, std::min<std::int64_t>(n_max, 12), seed};
    const std::int64_t cap = report.bounds.hess_cap;

    using Job = std::function<CheckResult(const CheckOptions&)>;
    const std::vector<std::pair<std::string, Job>> jobs = {
        {"binet", [=](const CheckOptions& o) { return checks::binet(n_max, o); }},
        {"charpoly_shift", [=](const CheckOptions& o) { return checks::charpoly_shift(cap, o); }},
        {"conv_brute", [=](const CheckOptions& o) { return checks::conv_brute(std::min<std::int64_t>(r_max, 3), std::min<std::int64_t>(n_max, 8), o); }},
        {"cor8", [=](const CheckOptions& o) { return checks::cor8(cap, o); }},
        {"cor9", [=](const CheckOptions& o) { return checks::cor9(n_max, o); }},
        {"degree_parity", [=](const CheckOptions& o) { return checks::degree_parity(r_max, n_max, o); }},
        {"eq14", [=](const CheckOptions& o) { return checks::eq14(n_max, o); }},
        {"eq15", [=](const CheckOptions& o) { return checks::eq15(std::min<std::int64_t>(cap, 10), o); }},
        {"five_way", [=](const CheckOptions& o) { return checks::five_way(r_max, n_max, cap, o); }},
        {"fib_combinatorial", [=](const CheckOptions& o) { return checks::fib_combinatorial(n_max, o); }},
        {"gf_fib", [=](const CheckOptions& o) { return checks::gf_fib(n_max, o); }},
        {"hess_cofactor", [=](const CheckOptions& o) { return checks::hess_cofactor(seed, o); }},
        {"lucas_relation", [=](const CheckOptions& o) { return checks::lucas_relation(n_max, o); }},
        {"quad_pow", [=](const CheckOptions& o) { return checks::quad_pow(seed, 200, o); }},
        {"ring_axioms", [=](const CheckOptions& o) { return checks::ring_axioms(seed, 1000, o); }},
        {"series_laws", [=](const CheckOptions& o) { return checks::series_laws(seed, 50, o); }},
        {"specialization", [=](const CheckOptions& o) { return checks::specialization(n_max, o); }},
        {"thm4_1", [=](const CheckOptions& o) { return checks::thm4_1(r_max, o); }},
        {"thm4_3", [=](const CheckOptions& o) { return checks::thm4_3(r_max, n_max, o); }},
        {"thm5", [=](const CheckOptions& o) { return checks::thm5(r_max, n_max, o); }},
        {"thm6", [=](const CheckOptions& o) { return checks::thm6(seed, 200, o); }},
        {"thm7", [=](const CheckOptions& o) { return checks::thm7(cap, o); }},
    };

    auto options_for = [&](const std::string& id) {
        return CheckOptions{options.corrupt_check && *options.corrupt_check == id};
    };

    if (options.parallel) {
        std::vector<std::future<CheckResult>> futures;
        for (const auto& [id, job] : jobs)
            futures.push_back(std::async(std::launch::async, job, options_for(id)));
        for (auto& f : futures) report.results.push_back(f.get());
    } else {
        for (const auto& [id, job] : jobs) report.results.push_back(job(options_for(id)));
    }

    std::sort(report.results.begin(), report.results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
    report.all_passed = std::all_of(report.results.begin(), report.results.end(),
                                    [](const CheckResult& r) { return r.passed; });
    return report;
}

nlohmann::json to_json(const CheckResult& result) {
    nlohmann::json j;
    j["check_id"] = result.check_id;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : result.params) j["params"][k] = v;
    j["passed"] = result.passed;
    if (result.counterexample) j["counterexample"] = *result.counterexample;
    j["elapsed_ms"] = result.elapsed_ms;
    return j;
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json j;
    j["bounds"] = {{"r_max", report.bounds.r_max},
                   {"n_max", report.bounds.n_max},
                   {"hess_cap", report.bounds.hess_cap},
                   {"seed", report.bounds.seed}};
    j["all_passed"] = report.all_passed;
    j["results"] = nlohmann::json::array();
    for (const auto& r : report.results) j["results"].push_back(to_json(r));
    return j;
}

std::vector<std::vector<Poly>> emit_table1(const std::vector<std::int64_t>& r_list, std::int64_t n_max) {
    if (n_max < 0) throw std::invalid_argument("emit_table1: n_max must be >= 0");
    for (auto r : r_list)
        if (r < 1) throw std::invalid_argument("emit_table1: r must be >= 1");
    std::vector<std::vector<Poly>> rows;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        std::vector<Poly> row;
        for (auto r : r_list) row.push_back(convolved(r, n));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace convfib
