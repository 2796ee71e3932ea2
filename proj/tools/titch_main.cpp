// Batch front end: every computation exposed as a subcommand that emits a
// seeded, byte-stable CSV or JSON artifact.
//
// Exit codes: 0 success, 1 internal invariant violated, 2 usage error,
// 3 output could not be written.
#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "titch/arith.hpp"
#include "titch/exp_sums.hpp"
#include "titch/report.hpp"
#include "titch/solution_counts.hpp"
#include "titch/titchmarsh.hpp"

namespace {

using u64 = std::uint64_t;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Integer flags accept plain digits or digits with a nonnegative integer
// exponent ("1e8"); fractional mantissas and signs are rejected, and the
// expansion is overflow checked.
bool parse_u64_sci(const std::string& text, u64& out) {
    std::size_t epos = text.find_first_of("eE");
    std::string mant = text.substr(0, epos);
    if (mant.empty() || mant.find_first_not_of("0123456789") != std::string::npos) return false;
    u64 value = 0;
    for (char ch : mant) {
        u64 digit = static_cast<u64>(ch - '0');
        if (value > (UINT64_MAX - digit) / 10) return false;
        value = value * 10 + digit;
    }
    if (epos != std::string::npos) {
        std::string exps = text.substr(epos + 1);
        if (exps.empty() || exps.find_first_not_of("0123456789") != std::string::npos ||
            exps.size() > 2) {
            return false;
        }
        u64 exponent = std::stoull(exps);
        for (u64 i = 0; i < exponent; ++i) {
            if (value > UINT64_MAX / 10) return false;
            value *= 10;
        }
    }
    out = value;
    return true;
}

int require_u64(const std::string& text, const char* flag, u64& out) {
    if (!parse_u64_sci(text, out)) {
        std::cerr << "error: " << flag << " expects an unsigned integer, got '" << text << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

// Writes the finished report to --out or stdout; any stream failure is an
// I/O error.
int emit(const std::string& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report << std::flush;
        if (!std::cout) {
            std::cerr << "error: could not write to stdout\n";
            return kExitIo;
        }
        return kExitOk;
    }
    std::ofstream ofs(out_path, std::ios::binary | std::ios::trunc);
    if (!ofs) {
        std::cerr << "error: could not open '" << out_path << "' for writing\n";
        return kExitIo;
    }
    ofs << report << std::flush;
    if (!ofs) {
        std::cerr << "error: could not write '" << out_path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

struct GlobalFlags {
    std::string seed = "42";
    std::string format = "csv";
    std::string out_path;
    std::string sieve_limit;
};

// Resolves the sieve limit for a cap N: automatic when the flag is unset,
// otherwise the explicit value, which must cover isqrt(N).
int resolve_sieve_limit(const GlobalFlags& g, u64 n_limit, u64& out) {
    u64 need = titch::isqrt(n_limit);
    if (g.sieve_limit.empty()) {
        out = need;
        return kExitOk;
    }
    int rc = require_u64(g.sieve_limit, "--sieve-limit", out);
    if (rc != kExitOk) return rc;
    if (out < need) {
        std::cerr << "error: --sieve-limit " << out << " does not cover isqrt(N) = " << need
                  << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_constant(const GlobalFlags& g, u64 seed, const std::string& p_limit_str) {
    u64 p_limit = 0;
    int rc = require_u64(p_limit_str, "--p-limit", p_limit);
    if (rc != kExitOk) return rc;
    if (p_limit < 3) {
        std::cerr << "error: --p-limit must be >= 3\n";
        return kExitUsage;
    }
    titch::SingularConstant c = titch::singular_series_constant(p_limit);
    return emit(g.format == "json" ? titch::constant_report_json(c, seed)
                                   : titch::constant_report_csv(c, seed),
                g.out_path);
}

int cmd_s_table(const GlobalFlags& g, u64 seed, const std::string& max_str, bool skip_brute) {
    u64 max_d = 0;
    int rc = require_u64(max_str, "--max", max_d);
    if (rc != kExitOk) return rc;
    if (max_d < 1) {
        std::cerr << "error: --max must be >= 1\n";
        return kExitUsage;
    }
    if (!skip_brute && max_d > 100000) {
        std::cerr << "error: the brute column needs --max <= 1e5; pass --skip-brute beyond\n";
        return kExitUsage;
    }
    std::vector<titch::STableRow> rows;
    for (u64 d = 1; d <= max_d; d += 2) {
        titch::STableRow row;
        row.d = d;
        titch::FactoredInteger f = titch::factorize(d);
        row.s_mult = titch::solution_count_mult(f);
        row.phi = titch::euler_phi(f);
        row.ratio_term = static_cast<double>(row.s_mult) /
                         (static_cast<double>(row.phi) * static_cast<double>(row.phi));
        row.has_brute = !skip_brute;
        if (row.has_brute) {
            row.s_brute = titch::solution_count_brute(d);
            if (row.s_brute != row.s_mult) {
                std::cerr << "invariant: s_brute(" << d << ") = " << row.s_brute
                          << " but s_mult = " << row.s_mult << "\n";
                return kExitInvariant;
            }
        }
        rows.push_back(row);
    }
    return emit(g.format == "json" ? titch::s_table_json(rows, seed)
                                   : titch::s_table_csv(rows, seed),
                g.out_path);
}

int cmd_expsum_verify(const GlobalFlags& g, u64 seed, const std::string& d_max_str,
                      const std::string& samples_str) {
    u64 d_max = 0;
    u64 samples = 0;
    int rc = require_u64(d_max_str, "--d-max", d_max);
    if (rc == kExitOk) rc = require_u64(samples_str, "--samples", samples);
    if (rc != kExitOk) return rc;
    if (d_max < 2 || d_max > 10000) {
        std::cerr << "error: --d-max must lie in [2, 1e4]\n";
        return kExitUsage;
    }
    titch::SweepResult sweep = titch::conic_bound_sweep(d_max, samples, seed);
    u64 mismatches = 0;
    for (const titch::BoundReport& r : sweep.reports) {
        titch::Complex direct = titch::conic_exp_sum_direct(r.params);
        if (std::abs(direct - r.value) > titch::eps_abs(r.params.d) ||
            !std::isfinite(r.implied_c)) {
            ++mismatches;
        }
    }
    rc = emit(g.format == "json" ? titch::expsum_report_json(sweep)
                                 : titch::expsum_report_csv(sweep),
              g.out_path);
    if (rc != kExitOk) return rc;
    if (mismatches > 0) {
        std::cerr << "invariant: " << mismatches
                  << " sample(s) disagree between factored and direct evaluation\n";
        return kExitInvariant;
    }
    return kExitOk;
}

// Default split point Z = floor(sqrt(N) / log N), clamped to at least 1.
u64 default_split(u64 n_limit) {
    double z = std::sqrt(static_cast<double>(n_limit)) / std::log(static_cast<double>(n_limit));
    u64 zi = static_cast<u64>(z);
    return zi < 1 ? 1 : zi;
}

int parse_cap_and_split(const std::string& n_str, const std::string& z_str, u64& n_limit,
                        u64& z) {
    int rc = require_u64(n_str, "--n", n_limit);
    if (rc != kExitOk) return rc;
    if (n_limit < 8) {
        std::cerr << "error: --n must be >= 8\n";
        return kExitUsage;
    }
    if (z_str.empty()) {
        z = default_split(n_limit);
    } else {
        rc = require_u64(z_str, "--z", z);
        if (rc != kExitOk) return rc;
    }
    u64 z_cap = titch::isqrt(n_limit + 1);
    if (z < 1 || z > z_cap) {
        std::cerr << "error: --z must lie in [1, " << z_cap << "]\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_sum(const GlobalFlags& g, u64 seed, const std::string& n_str, const std::string& z_str,
            const std::string& p_limit_str) {
    u64 n_limit = 0;
    u64 z = 0;
    int rc = parse_cap_and_split(n_str, z_str, n_limit, z);
    if (rc != kExitOk) return rc;
    u64 p_limit = 0;
    rc = require_u64(p_limit_str, "--p-limit", p_limit);
    if (rc != kExitOk) return rc;
    if (p_limit < 3) {
        std::cerr << "error: --p-limit must be >= 3\n";
        return kExitUsage;
    }
    u64 sieve_limit = 0;
    rc = resolve_sieve_limit(g, n_limit, sieve_limit);
    if (rc != kExitOk) return rc;

    titch::PrimeSieve sieve(sieve_limit);
    titch::PairStats stats = titch::pair_stats(n_limit, sieve);
    titch::DecompositionReport dec = titch::decompose(n_limit, z, sieve);
    if (dec.s != stats.sum_tau || dec.s != dec.m1 + dec.m2 - dec.q) {
        std::cerr << "invariant: divisor-sum decomposition disagrees with direct enumeration\n";
        return kExitInvariant;
    }
    titch::SingularConstant c = titch::singular_series_constant(p_limit);
    titch::MainTermReport main = titch::main_term_report(n_limit, stats.sum_tau, c);
    return emit(g.format == "json" ? titch::sum_report_json(stats, dec, main, c, seed)
                                   : titch::sum_report_csv(stats, dec, main, c, seed),
                g.out_path);
}

int cmd_decompose(const GlobalFlags& g, u64 seed, const std::string& n_str,
                  const std::string& z_str) {
    u64 n_limit = 0;
    u64 z = 0;
    int rc = parse_cap_and_split(n_str, z_str, n_limit, z);
    if (rc != kExitOk) return rc;
    u64 sieve_limit = 0;
    rc = resolve_sieve_limit(g, n_limit, sieve_limit);
    if (rc != kExitOk) return rc;

    titch::PrimeSieve sieve(sieve_limit);
    titch::DecompositionReport dec = titch::decompose(n_limit, z, sieve);
    return emit(g.format == "json" ? titch::decompose_report_json(dec, seed)
                                   : titch::decompose_report_csv(dec, seed),
                g.out_path);
}

int cmd_pairs(const GlobalFlags& g, u64 seed, const std::string& n_str, double k) {
    u64 n_limit = 0;
    int rc = require_u64(n_str, "--n", n_limit);
    if (rc != kExitOk) return rc;
    if (n_limit < 1000) {
        std::cerr << "error: --n must be >= 1e3\n";
        return kExitUsage;
    }
    if (!(k > 0.0)) {
        std::cerr << "error: --k must be positive\n";
        return kExitUsage;
    }
    u64 sieve_limit = 0;
    rc = resolve_sieve_limit(g, n_limit, sieve_limit);
    if (rc != kExitOk) return rc;

    titch::PrimeSieve sieve(sieve_limit);
    titch::PairStats stats = titch::pair_stats(n_limit, sieve);
    titch::PairCountCheck chk = titch::pair_count_check(n_limit, stats.pair_count, k);
    return emit(g.format == "json" ? titch::pairs_report_json(chk, stats.sum_tau, seed)
                                   : titch::pairs_report_csv(chk, stats.sum_tau, seed),
                g.out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"number-theoretic sums over prime pairs: solution counts, exponential"
                 " sums, and divisor-sum decompositions"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--seed", g.seed, "RNG seed, recorded verbatim in every artifact")
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "write the report to this path instead of stdout");
    app.add_option("--sieve-limit", g.sieve_limit,
                   "prime sieve cap (default: isqrt of the relevant N)");

    std::string p_limit = "1000000";
    CLI::App* constant = app.add_subcommand("constant", "truncated Euler product and its tail");
    constant->add_option("--p-limit", p_limit, "truncate the product at this prime bound")
        ->capture_default_str();

    std::string table_max;
    bool skip_brute = false;
    CLI::App* s_table = app.add_subcommand("s-table", "solution counts for odd d");
    s_table->add_option("--max", table_max, "largest d to tabulate")->required();
    s_table->add_flag("--skip-brute", skip_brute, "multiplicative evaluation only");

    std::string d_max = "3000";
    std::string samples = "10000";
    CLI::App* expsum = app.add_subcommand("expsum", "exponential sum sweeps");
    expsum->require_subcommand(1);
    CLI::App* verify = expsum->add_subcommand(
        "verify", "factored vs direct conic sums on seeded tuples, with bound statistics");
    verify->add_option("--d-max", d_max, "largest modulus to sample")->capture_default_str();
    verify->add_option("--samples", samples, "number of seeded tuples")->capture_default_str();

    std::string sum_n;
    std::string sum_z;
    CLI::App* sum = app.add_subcommand("sum", "divisor sum over prime pairs with main term");
    sum->add_option("--n", sum_n, "cap N on p^2 + q^2")->required();
    sum->add_option("--z", sum_z, "split point (default floor(sqrt(N)/log N), at least 1)");
    sum->add_option("--p-limit", p_limit, "Euler product truncation for the main term")
        ->capture_default_str();

    std::string dec_n;
    std::string dec_z;
    CLI::App* decompose = app.add_subcommand("decompose", "split the divisor sum at Z");
    decompose->add_option("--n", dec_n, "cap N on p^2 + q^2")->required();
    decompose->add_option("--z", dec_z, "split point (default floor(sqrt(N)/log N), at least 1)");

    std::string pairs_n;
    double pairs_k = 5.0;
    CLI::App* pairs = app.add_subcommand("pairs", "pair count against pi N / log^2 N");
    pairs->add_option("--n", pairs_n, "cap N on p^2 + q^2")->required();
    pairs->add_option("--k", pairs_k, "budget multiplier K")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    u64 seed = 0;
    int rc = require_u64(g.seed, "--seed", seed);
    if (rc != kExitOk) return rc;

    try {
        if (constant->parsed()) return cmd_constant(g, seed, p_limit);
        if (s_table->parsed()) return cmd_s_table(g, seed, table_max, skip_brute);
        if (expsum->parsed() && verify->parsed()) {
            return cmd_expsum_verify(g, seed, d_max, samples);
        }
        if (sum->parsed()) return cmd_sum(g, seed, sum_n, sum_z, p_limit);
        if (decompose->parsed()) return cmd_decompose(g, seed, dec_n, dec_z);
        if (pairs->parsed()) return cmd_pairs(g, seed, pairs_n, pairs_k);
    } catch (const std::exception& e) {
        std::cerr << "invariant: " << e.what() << "\n";
        return kExitInvariant;
    }
    std::cerr << "error: no subcommand selected\n";
    return kExitUsage;
}
