#include "titch/report.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

namespace titch {

namespace {

std::string u64_str(std::uint64_t v) { return std::to_string(v); }
std::string i64_str(std::int64_t v) { return std::to_string(v); }

// Flat JSON object with keys emitted in sorted order, one per line.
std::string json_object(std::vector<std::pair<std::string, std::string>> fields) {
    std::sort(fields.begin(), fields.end());
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out += "  \"" + fields[i].first + "\": " + fields[i].second;
        if (i + 1 < fields.size()) out += ",";
        out += "\n";
    }
    out += "}\n";
    return out;
}

std::string seed_comment(std::uint64_t seed) { return "# seed=" + u64_str(seed) + "\n"; }

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string constant_report_json(const SingularConstant& c, std::uint64_t seed) {
    return json_object({
        {"p_limit", u64_str(c.p_limit)},
        {"value", format_double(c.value)},
        {"tail_bound", format_double(c.tail_bound)},
        {"leading_constant", format_double(main_term_constant(c))},
        {"seed", u64_str(seed)},
    });
}

std::string constant_report_csv(const SingularConstant& c, std::uint64_t seed) {
    std::string out = seed_comment(seed);
    out += "p_limit,value,tail_bound,leading_constant\n";
    out += u64_str(c.p_limit) + "," + format_double(c.value) + "," + format_double(c.tail_bound) +
           "," + format_double(main_term_constant(c)) + "\n";
    return out;
}

std::string s_table_csv(const std::vector<STableRow>& rows, std::uint64_t seed) {
    std::string out = seed_comment(seed);
    out += "d,s_brute,s_mult,phi,ratio_term\n";
    for (const STableRow& r : rows) {
        out += u64_str(r.d) + ",";
        if (r.has_brute) out += u64_str(r.s_brute);
        out += "," + u64_str(r.s_mult) + "," + u64_str(r.phi) + "," + format_double(r.ratio_term) +
               "\n";
    }
    return out;
}

std::string s_table_json(const std::vector<STableRow>& rows, std::uint64_t seed) {
    std::string out = "{\n  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const STableRow& r = rows[i];
        out += "    {\"d\": " + u64_str(r.d) +
               ", \"s_brute\": " + (r.has_brute ? u64_str(r.s_brute) : "null") +
               ", \"s_mult\": " + u64_str(r.s_mult) + ", \"phi\": " + u64_str(r.phi) +
               ", \"ratio_term\": " + format_double(r.ratio_term) + "}";
        if (i + 1 < rows.size()) out += ",";
        out += "\n";
    }
    out += "  ],\n  \"seed\": " + u64_str(seed) + "\n}\n";
    return out;
}

std::string expsum_report_csv(const SweepResult& sweep) {
    std::string out = seed_comment(sweep.seed);
    out += "# c_est=" + format_double(sweep.c_est) + "\n";
    out += "e1,e2,h1,h2,d,omega,re,im,magnitude,normalizer,ratio,implied_C\n";
    for (const BoundReport& r : sweep.reports) {
        out += u64_str(r.params.e1) + "," + u64_str(r.params.e2) + "," + i64_str(r.params.h1) +
               "," + i64_str(r.params.h2) + "," + u64_str(r.params.d) + "," +
               u64_str(r.omega_d) + "," + format_double(r.value.real()) + "," +
               format_double(r.value.imag()) + "," + format_double(r.magnitude) + "," +
               format_double(r.normalizer) + "," + format_double(r.ratio) + "," +
               format_double(r.implied_c) + "\n";
    }
    return out;
}

std::string expsum_report_json(const SweepResult& sweep) {
    std::string out = "{\n  \"c_est\": " + format_double(sweep.c_est) + ",\n  \"rows\": [\n";
    for (std::size_t i = 0; i < sweep.reports.size(); ++i) {
        const BoundReport& r = sweep.reports[i];
        out += "    {\"e1\": " + u64_str(r.params.e1) + ", \"e2\": " + u64_str(r.params.e2) +
               ", \"h1\": " + i64_str(r.params.h1) + ", \"h2\": " + i64_str(r.params.h2) +
               ", \"d\": " + u64_str(r.params.d) + ", \"omega\": " + u64_str(r.omega_d) +
               ", \"re\": " + format_double(r.value.real()) +
               ", \"im\": " + format_double(r.value.imag()) +
               ", \"magnitude\": " + format_double(r.magnitude) +
               ", \"normalizer\": " + format_double(r.normalizer) +
               ", \"ratio\": " + format_double(r.ratio) +
               ", \"implied_C\": " + format_double(r.implied_c) + "}";
        if (i + 1 < sweep.reports.size()) out += ",";
        out += "\n";
    }
    out += "  ],\n  \"seed\": " + u64_str(sweep.seed) + "\n}\n";
    return out;
}

std::string sum_report_json(const PairStats& stats, const DecompositionReport& dec,
                            const MainTermReport& main, const SingularConstant& c,
                            std::uint64_t seed) {
    return json_object({
        {"n", u64_str(stats.n_limit)},
        {"pair_count", u64_str(stats.pair_count)},
        {"sum_tau", u64_str(stats.sum_tau)},
        {"z", u64_str(dec.z)},
        {"m1", u64_str(dec.m1)},
        {"m2", u64_str(dec.m2)},
        {"q", u64_str(dec.q)},
        {"main_term", format_double(main.main_term)},
        {"ratio", format_double(main.ratio)},
        {"error_budget", format_double(main.error_budget)},
        {"constant_p_limit", u64_str(c.p_limit)},
        {"constant_value", format_double(c.value)},
        {"seed", u64_str(seed)},
    });
}

std::string sum_report_csv(const PairStats& stats, const DecompositionReport& dec,
                           const MainTermReport& main, const SingularConstant& c,
                           std::uint64_t seed) {
    std::string out = seed_comment(seed);
    out += "n,pair_count,sum_tau,z,m1,m2,q,main_term,ratio,error_budget,constant_p_limit,"
           "constant_value\n";
    out += u64_str(stats.n_limit) + "," + u64_str(stats.pair_count) + "," +
           u64_str(stats.sum_tau) + "," + u64_str(dec.z) + "," + u64_str(dec.m1) + "," +
           u64_str(dec.m2) + "," + u64_str(dec.q) + "," + format_double(main.main_term) + "," +
           format_double(main.ratio) + "," + format_double(main.error_budget) + "," +
           u64_str(c.p_limit) + "," + format_double(c.value) + "\n";
    return out;
}

std::string decompose_report_json(const DecompositionReport& dec, std::uint64_t seed) {
    return json_object({
        {"n", u64_str(dec.n_limit)},
        {"z", u64_str(dec.z)},
        {"m1", u64_str(dec.m1)},
        {"m2", u64_str(dec.m2)},
        {"q", u64_str(dec.q)},
        {"s", u64_str(dec.s)},
        {"seed", u64_str(seed)},
    });
}

std::string decompose_report_csv(const DecompositionReport& dec, std::uint64_t seed) {
    std::string out = seed_comment(seed);
    out += "n,z,m1,m2,q,s\n";
    out += u64_str(dec.n_limit) + "," + u64_str(dec.z) + "," + u64_str(dec.m1) + "," +
           u64_str(dec.m2) + "," + u64_str(dec.q) + "," + u64_str(dec.s) + "\n";
    return out;
}

std::string pairs_report_json(const PairCountCheck& chk, std::uint64_t sum_tau,
                              std::uint64_t seed) {
    return json_object({
        {"n", u64_str(chk.n_limit)},
        {"pair_count", u64_str(chk.pair_count)},
        {"sum_tau", u64_str(sum_tau)},
        {"expected_pairs", format_double(chk.expected)},
        {"ratio", format_double(chk.ratio)},
        {"budget", format_double(chk.budget)},
        {"pass", chk.pass ? "true" : "false"},
        {"seed", u64_str(seed)},
    });
}

std::string pairs_report_csv(const PairCountCheck& chk, std::uint64_t sum_tau,
                             std::uint64_t seed) {
    std::string out = seed_comment(seed);
    out += "n,pair_count,sum_tau,expected_pairs,ratio,budget,pass\n";
    out += u64_str(chk.n_limit) + "," + u64_str(chk.pair_count) + "," + u64_str(sum_tau) + "," +
           format_double(chk.expected) + "," + format_double(chk.ratio) + "," +
           format_double(chk.budget) + "," + (chk.pass ? "true" : "false") + "\n";
    return out;
}

}  // namespace titch
