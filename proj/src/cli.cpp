#include "convfib/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "convfib/hessenberg.hpp"
#include "convfib/parse.hpp"
#include "convfib/render.hpp"
#include "convfib/sequences.hpp"
#include "convfib/series.hpp"
#include "convfib/verify.hpp"

namespace convfib::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kAllFormats = {"text", "csv", "json", "latex"};

std::string convolved_label(std::int64_t r, std::int64_t n) {
    return "F^(" + std::to_string(r) + ")_" + std::to_string(n);
}

std::string convolved_latex(std::int64_t r, std::int64_t n) {
    return "F_{h," + std::to_string(n) + "}^{(" + std::to_string(r) + ")}(x)";
}

/// Rows of convolved values indexed by n = first_n, first_n + 1, ...
void write_table(std::ostream& out, const std::string& format, const std::vector<std::int64_t>& r_list,
                 std::int64_t first_n, const std::vector<std::vector<Poly>>& rows) {
    if (format == "text") {
        out << 'n';
        for (auto r : r_list) out << "\tF^(" << r << ')';
        out << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << first_n + static_cast<std::int64_t>(i);
            for (const auto& p : rows[i]) out << '\t' << to_text(p);
            out << '\n';
        }
    } else if (format == "csv") {
        out << "n,r,poly\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t c = 0; c < r_list.size(); ++c)
                out << first_n + static_cast<std::int64_t>(i) << ',' << r_list[c] << ',' << to_text(rows[i][c]) << '\n';
    } else if (format == "json") {
        nlohmann::json j;
        j["r"] = r_list;
        j["rows"] = nlohmann::json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            nlohmann::json row;
            row["n"] = first_n + static_cast<std::int64_t>(i);
            row["values"] = nlohmann::json::array();
            for (const auto& p : rows[i]) row["values"].push_back(to_json(p));
            j["rows"].push_back(std::move(row));
        }
        out << j.dump(2) << '\n';
    } else {
        out << "\\begin{tabular}{c" << std::string(r_list.size(), 'c') << "}\n";
        out << "$n$";
        for (auto r : r_list) out << " & $F_{h,n}^{(" << r << ")}(x)$";
        out << " \\\\\n\\hline\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << first_n + static_cast<std::int64_t>(i);
            for (const auto& p : rows[i]) out << " & $" << to_latex(p) << '$';
            out << " \\\\\n";
        }
        out << "\\end{tabular}\n";
    }
}

BigInt parse_integer(const std::string& text) {
    BigInt v;
    if (text.empty() || v.set_str(text, 10) != 0) throw UsageError("--at expects an integer, got '" + text + "'");
    return v;
}

int cmd_table(std::ostream& out, const std::vector<std::int64_t>& r_list, std::int64_t n_max, const std::string& format,
              const std::optional<std::string>& subst, const std::optional<std::string>& at) {
    auto rows = emit_table1(r_list, n_max);
    std::optional<Poly> image;
    if (subst) image = parse_poly(*subst);
    std::optional<BigInt> point;
    if (at) point = parse_integer(*at);
    for (auto& row : rows)
        for (auto& p : row) {
            if (image) p = compose(p, *image);
            if (point) p = Poly(evaluate(p, *point));
        }
    write_table(out, format, r_list, 0, rows);
    return kOk;
}

int cmd_gf(std::ostream& out, std::int64_t r, std::int64_t terms, const std::string& format) {
    const auto coeffs = gf_convolved(r, static_cast<std::size_t>(terms));
    if (format == "json") {
        out << to_json(Series(coeffs.size(), coeffs)).dump(2) << '\n';
        return kOk;
    }
    std::vector<std::vector<Poly>> rows;
    for (const auto& p : coeffs) rows.push_back({p});
    write_table(out, format, {r}, 1, rows);
    return kOk;
}

int cmd_charpoly(std::ostream& out, std::int64_t n, const std::string& format) {
    const TPoly p = char_poly(n);
    if (format == "json") {
        out << to_json(p).dump(2) << '\n';
        return kOk;
    }
    if (format == "csv") {
        out << "n,r,poly\n";
        for (std::int64_t l = 0; l <= n; ++l)
            out << n - l + 1 << ',' << l + 1 << ',' << to_text(p.coefficient(static_cast<std::size_t>(l))) << '\n';
        return kOk;
    }
    const bool latex = format == "latex";
    if (latex) out << "\\begin{tabular}{ccc}\n$l$ & coefficient of $t^l$ & identity \\\\\n\\hline\n";
    else out << "p_" << n << "(t) = " << to_text(p) << '\n';
    for (std::int64_t l = 0; l <= n; ++l) {
        const char sign = (n - l) % 2 == 0 ? '+' : '-';
        const Poly& c = p.coefficient(static_cast<std::size_t>(l));
        if (latex)
            out << l << " & $" << to_latex(c) << "$ & $" << sign << convolved_latex(l + 1, n - l + 1) << "$ \\\\\n";
        else
            out << "t^" << l << '\t' << to_text(c) << "\t= " << sign << convolved_label(l + 1, n - l + 1) << '\n';
    }
    if (latex) out << "\\end{tabular}\n";
    return kOk;
}

int cmd_verify(std::ostream& out, std::int64_t r_max, std::int64_t n_max, std::uint64_t seed, const std::string& format) {
    const SuiteReport report = run_suite(r_max, n_max, seed);
    if (format == "json") {
        out << to_json(report).dump(2) << '\n';
    } else {
        for (const auto& r : report.results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.check_id;
            for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
            out << " (" << r.elapsed_ms << " ms)\n";
            if (r.counterexample) out << "    counterexample: " << *r.counterexample << '\n';
        }
        out << "all_passed: " << (report.all_passed ? "true" : "false") << '\n';
    }
    return report.all_passed ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convolved h(x)-Fibonacci and h(x)-Lucas polynomials in exact arithmetic", "convfib"};
    app.require_subcommand(1);

    std::vector<std::int64_t> table_r{1, 2, 3};
    std::int64_t table_n_max = 8;
    std::string table_format = "text";
    std::optional<std::string> table_subst;
    std::optional<std::string> table_at;
    auto* table = app.add_subcommand("table", "Print F^(r)_{h,n} for n = 0..n-max");
    table->add_option("--r", table_r, "Comma-separated convolution orders")->delimiter(',')->check(CLI::PositiveNumber);
    table->add_option("--n-max", table_n_max, "Largest index n")->check(CLI::NonNegativeNumber);
    table->add_option("--format", table_format)->check(CLI::IsMember(kAllFormats));
    table->add_option("--subst", table_subst, "Substitute h -> polynomial in h or x, e.g. 2 or x^2+1");
    table->add_option("--at", table_at, "Evaluate at an integer after substitution");

    std::int64_t verify_r_max = 5;
    std::int64_t verify_n_max = 30;
    std::uint64_t verify_seed = 0;
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "Run the identity suite");
    verify->add_option("--r-max", verify_r_max)->check(CLI::PositiveNumber);
    verify->add_option("--n-max", verify_n_max)->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
    verify->add_option("--seed", verify_seed);
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

    std::int64_t gf_r = 1;
    std::int64_t gf_terms = 10;
    std::string gf_format = "text";
    auto* gf = app.add_subcommand("gf", "Expand (1 - h t - t^2)^(-r)");
    gf->add_option("--r", gf_r)->check(CLI::PositiveNumber);
    gf->add_option("--terms", gf_terms)->check(CLI::PositiveNumber);
    gf->add_option("--format", gf_format)->check(CLI::IsMember(kAllFormats));

    std::int64_t cp_n = 1;
    std::string cp_format = "text";
    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of the n x n h-Fibonacci matrix");
    charpoly->add_option("--n", cp_n)->required()->check(CLI::PositiveNumber);
    charpoly->add_option("--format", cp_format)->check(CLI::IsMember(kAllFormats));

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*table) return cmd_table(out, table_r, table_n_max, table_format, table_subst, table_at);
        if (*verify) return cmd_verify(out, verify_r_max, verify_n_max, verify_seed, verify_format);
        if (*gf) return cmd_gf(out, gf_r, gf_terms, gf_format);
        if (*charpoly) return cmd_charpoly(out, cp_n, cp_format);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace convfib::cli
