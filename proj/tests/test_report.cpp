// Report rendering: exact header strings, sorted JSON keys, float
// round-tripping, and byte-identical re-emission.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "titch/report.hpp"

using namespace titch;

TEST_CASE("format_double round-trips through strtod") {
    for (double x : {0.1, 1.0 / 3.0, std::numbers::pi, 1e-300, 1234567890.123456789,
                     -0.3819660112501051, 2.0}) {
        std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(0.25) == "0.25");
}

TEST_CASE("constant report layout") {
    SingularConstant c{3, 1.5, 0.25};
    std::string expected_csv = "# seed=7\n";
    expected_csv += "p_limit,value,tail_bound,leading_constant\n";
    expected_csv += "3,1.5,0.25," + format_double(std::numbers::pi / 4.0 * 1.5) + "\n";
    CHECK(constant_report_csv(c, 7) == expected_csv);
    CHECK(constant_report_csv(c, 7) == constant_report_csv(c, 7));

    std::string json = constant_report_json(c, 7);
    CHECK(json == constant_report_json(c, 7));
    // Keys appear sorted: leading_constant < p_limit < seed < tail_bound < value.
    CHECK(json.find("\"leading_constant\"") < json.find("\"p_limit\""));
    CHECK(json.find("\"p_limit\"") < json.find("\"seed\""));
    CHECK(json.find("\"seed\"") < json.find("\"tail_bound\""));
    CHECK(json.find("\"tail_bound\"") < json.find("\"value\""));
}

TEST_CASE("s-table rows with and without brute entries") {
    std::vector<STableRow> rows = {
        {3, true, 4, 4, 2, 1.0},
        {100001, false, 0, 99840, 99792, 99840.0 / (99792.0 * 99792.0)},
    };
    std::string csv = s_table_csv(rows, 42);
    std::string expected = "# seed=42\n";
    expected += "d,s_brute,s_mult,phi,ratio_term\n";
    expected += "3,4,4,2,1\n";
    expected += "100001,,99840,99792," + format_double(rows[1].ratio_term) + "\n";
    CHECK(csv == expected);

    std::string json = s_table_json(rows, 42);
    CHECK(json.find("\"s_brute\": 4") != std::string::npos);
    CHECK(json.find("\"s_brute\": null") != std::string::npos);
    CHECK(json.find("\"seed\": 42") != std::string::npos);
    CHECK(json == s_table_json(rows, 42));
}

TEST_CASE("expsum report carries the sweep summary in comments") {
    SweepResult sweep;
    sweep.seed = 42;
    sweep.c_est = 1.5;
    BoundReport r;
    r.params = {2, 3, -1, 4, 15};
    r.value = {1.0, -0.5};
    r.omega_d = 2;
    r.magnitude = 1.118033988749895;
    r.normalizer = std::sqrt(15.0);
    r.ratio = r.magnitude / r.normalizer;
    r.implied_c = std::sqrt(r.ratio);
    sweep.reports.push_back(r);

    std::string csv = expsum_report_csv(sweep);
    CHECK(csv.rfind("# seed=42\n# c_est=1.5\n", 0) == 0);
    CHECK(csv.find("e1,e2,h1,h2,d,omega,re,im,magnitude,normalizer,ratio,implied_C\n")
          != std::string::npos);
    CHECK(csv.find("2,3,-1,4,15,2,1,-0.5,") != std::string::npos);
    CHECK(csv == expsum_report_csv(sweep));

    std::string json = expsum_report_json(sweep);
    CHECK(json.find("\"c_est\": 1.5") != std::string::npos);
    CHECK(json.find("\"h1\": -1") != std::string::npos);
    CHECK(json == expsum_report_json(sweep));
}

TEST_CASE("sum report schema") {
    PairStats stats{1000, 42, 1137};
    DecompositionReport dec{1000, 5, 900, 260, 23, 1137};
    SingularConstant c{1000, 1.43, 0.004};
    MainTermReport main = main_term_report(1000, 1137, c);

    std::string json = sum_report_json(stats, dec, main, c, 42);
    for (const char* key : {"\"constant_p_limit\"", "\"constant_value\"", "\"error_budget\"",
                            "\"m1\"", "\"m2\"", "\"main_term\"", "\"n\"", "\"pair_count\"",
                            "\"q\"", "\"ratio\"", "\"seed\"", "\"sum_tau\"", "\"z\""}) {
        CHECK(json.find(key) != std::string::npos);
    }
    CHECK(json == sum_report_json(stats, dec, main, c, 42));

    std::string csv = sum_report_csv(stats, dec, main, c, 42);
    CHECK(csv.find("n,pair_count,sum_tau,z,m1,m2,q,main_term,ratio,error_budget,"
                   "constant_p_limit,constant_value\n")
          != std::string::npos);
    CHECK(csv.find("1000,42,1137,5,900,260,23,") != std::string::npos);
    CHECK(csv == sum_report_csv(stats, dec, main, c, 42));
}

TEST_CASE("decompose report stays minimal") {
    DecompositionReport dec{8, 1, 2, 2, 1, 3};
    std::string csv = decompose_report_csv(dec, 42);
    CHECK(csv == "# seed=42\nn,z,m1,m2,q,s\n8,1,2,2,1,3\n");

    std::string json = decompose_report_json(dec, 42);
    CHECK(json.find("\"m1\"") < json.find("\"m2\""));
    CHECK(json.find("\"m2\"") < json.find("\"n\""));
    CHECK(json.find("\"n\"") < json.find("\"q\""));
    CHECK(json.find("\"q\"") < json.find("\"s\""));
    CHECK(json.find("\"s\"") < json.find("\"seed\""));
    CHECK(json.find("\"seed\"") < json.find("\"z\""));
    CHECK(json.find("\"s\": 3") != std::string::npos);
}

TEST_CASE("pairs report records the comparison verdict") {
    PairCountCheck chk;
    chk.n_limit = 1000000;
    chk.pair_count = 16000;
    chk.expected = 16460.0;
    chk.ratio = 16000.0 / 16460.0;
    chk.budget = 0.95;
    chk.pass = true;

    std::string csv = pairs_report_csv(chk, 250000, 42);
    CHECK(csv.find("n,pair_count,sum_tau,expected_pairs,ratio,budget,pass\n")
          != std::string::npos);
    CHECK(csv.find("1000000,16000,250000,16460,") != std::string::npos);
    CHECK(csv.find(",true\n") != std::string::npos);
    CHECK(csv == pairs_report_csv(chk, 250000, 42));

    std::string json = pairs_report_json(chk, 250000, 42);
    CHECK(json.find("\"pass\": true") != std::string::npos);
    CHECK(json == pairs_report_json(chk, 250000, 42));
}
