// Rendering of run artifacts as CSV or JSON.  Everything is emitted with
// sorted keys, ascending rows, and 17-significant-digit floats, so a report
// regenerated with the same flags and seed is byte identical.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "titch/exp_sums.hpp"
#include "titch/solution_counts.hpp"
#include "titch/titchmarsh.hpp"

namespace titch {

// Doubles formatted with %.17g: enough digits to round-trip exactly.
std::string format_double(double x);

std::string constant_report_json(const SingularConstant& c, std::uint64_t seed);
std::string constant_report_csv(const SingularConstant& c, std::uint64_t seed);

struct STableRow {
    std::uint64_t d = 1;
    bool has_brute = true;
    std::uint64_t s_brute = 0;
    std::uint64_t s_mult = 0;
    std::uint64_t phi = 1;
    double ratio_term = 0.0;  // s(d) / phi(d)^2
};

std::string s_table_csv(const std::vector<STableRow>& rows, std::uint64_t seed);
std::string s_table_json(const std::vector<STableRow>& rows, std::uint64_t seed);

std::string expsum_report_csv(const SweepResult& sweep);
std::string expsum_report_json(const SweepResult& sweep);

std::string sum_report_json(const PairStats& stats, const DecompositionReport& dec,
                            const MainTermReport& main, const SingularConstant& c,
                            std::uint64_t seed);
std::string sum_report_csv(const PairStats& stats, const DecompositionReport& dec,
                           const MainTermReport& main, const SingularConstant& c,
                           std::uint64_t seed);

std::string decompose_report_json(const DecompositionReport& dec, std::uint64_t seed);
std::string decompose_report_csv(const DecompositionReport& dec, std::uint64_t seed);

std::string pairs_report_json(const PairCountCheck& chk, std::uint64_t sum_tau, std::uint64_t seed);
std::string pairs_report_csv(const PairCountCheck& chk, std::uint64_t sum_tau, std::uint64_t seed);

}  // namespace titch
