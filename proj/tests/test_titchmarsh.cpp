// Prime pair divisor sums: fixtures computed by hand, a from-scratch
// divisor-scan oracle for the decomposition, and consistency of the
// main-term reports.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "titch/arith.hpp"
#include "titch/solution_counts.hpp"
#include "titch/titchmarsh.hpp"

using namespace titch;
using u64 = std::uint64_t;

namespace {

struct BruteSplit {
    u64 pairs = 0;
    u64 tau_total = 0;
    u64 m1 = 0;
    u64 m2 = 0;
    u64 q = 0;
};

// Independent enumeration: primes by trial division, divisors by scanning
// d = 1..sqrt(n), ordered pairs via two full loops.
BruteSplit brute_split(u64 n_limit, u64 z) {
    std::vector<u64> primes;
    for (u64 p = 2; p * p <= n_limit; ++p) {
        bool prime = p > 1;
        for (u64 f = 2; f * f <= p && prime; ++f) {
            if (p % f == 0) prime = false;
        }
        if (prime) primes.push_back(p);
    }
    BruteSplit out;
    for (u64 p : primes) {
        for (u64 q : primes) {
            if (p * p + q * q > n_limit) continue;
            u64 n = p * p + q * q + 1;
            ++out.pairs;
            u64 root = isqrt(n);
            u64 below_root = 0;
            u64 below_z = 0;
            for (u64 d = 1; d <= root; ++d) {
                if (n % d != 0) continue;
                ++below_root;
                if (d <= z) ++below_z;
                out.tau_total += (d * d == n) ? 1 : 2;
            }
            out.m1 += 2 * below_z;
            out.m2 += 2 * (below_root - below_z);
            out.q += (root * root == n) ? 1 : 0;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("pair_stats fixtures at the smallest caps") {
    PrimeSieve sieve(100);
    // N = 8 admits only (2, 2): n = 9, tau = 3.
    PairStats s8 = pair_stats(8, sieve);
    CHECK(s8.pair_count == 1);
    CHECK(s8.sum_tau == 3);
    // N = 13 adds (2, 3) and (3, 2): n = 14, tau = 4 each.
    PairStats s13 = pair_stats(13, sieve);
    CHECK(s13.pair_count == 3);
    CHECK(s13.sum_tau == 11);
    CHECK_THROWS_AS(pair_stats(7, sieve), std::invalid_argument);
    CHECK_THROWS_AS(pair_stats(1000000, PrimeSieve(10)), std::invalid_argument);
}

TEST_CASE("pair_stats and decompose match the brute oracle") {
    PrimeSieve sieve(1100);
    for (u64 n : {8ULL, 13ULL, 50ULL, 100ULL, 477ULL, 1000ULL, 4097ULL, 100000ULL, 1000000ULL}) {
        std::vector<u64> zs = {1, 2, isqrt(n + 1)};
        if (isqrt(n) > 4) zs.push_back(isqrt(n) / 2);
        PairStats stats = pair_stats(n, sieve);
        for (u64 z : zs) {
            BruteSplit want = brute_split(n, z);
            DecompositionReport rep = decompose(n, z, sieve);
            REQUIRE(stats.pair_count == want.pairs);
            REQUIRE(stats.sum_tau == want.tau_total);
            REQUIRE(rep.m1 == want.m1);
            REQUIRE(rep.m2 == want.m2);
            REQUIRE(rep.q == want.q);
            REQUIRE(rep.s == want.tau_total);
            REQUIRE(rep.s == rep.m1 + rep.m2 - rep.q);
        }
    }
}

TEST_CASE("decompose fixtures and the split boundary") {
    PrimeSieve sieve(100);
    DecompositionReport z1 = decompose(8, 1, sieve);
    CHECK(z1.m1 == 2);
    CHECK(z1.m2 == 2);
    CHECK(z1.q == 1);
    CHECK(z1.s == 3);
    DecompositionReport z3 = decompose(8, 3, sieve);
    CHECK(z3.m1 == 4);
    CHECK(z3.m2 == 0);
    CHECK(z3.q == 1);
    CHECK(z3.s == 3);
    // At Z = isqrt(N + 1) every counted divisor lands in M1.
    for (u64 n : {13ULL, 1000ULL, 9999ULL}) {
        DecompositionReport top = decompose(n, isqrt(n + 1), sieve);
        CHECK(top.m2 == 0);
        CHECK(top.s == pair_stats(n, sieve).sum_tau);
    }
    CHECK_THROWS_AS(decompose(1000, 0, sieve), std::domain_error);
    CHECK_THROWS_AS(decompose(1000, isqrt(1001) + 1, sieve), std::domain_error);
}

TEST_CASE("square values stay pinned to the single pair (2, 2)") {
    // p^2 + q^2 + 1 = m^2 forces p = q = 2: odd m makes p, q both even, and
    // even m needs q^2 = (m-3)(m+3) + 8 with q odd, which only m = 3 allows.
    PrimeSieve sieve(1100);
    for (u64 n : {8ULL, 13ULL, 1000ULL, 10000ULL, 1000000ULL}) {
        CHECK(square_value_count(n, sieve) == 1);
        CHECK(decompose(n, 1, sieve).q == 1);
    }
}

TEST_CASE("main term report algebra") {
    SingularConstant c{1000, 2.0, 0.004};
    MainTermReport rep = main_term_report(10000, 5000, c);
    double log_n = std::log(10000.0);
    CHECK(rep.main_term
          == doctest::Approx(std::numbers::pi / 4.0 * 2.0 * 10000.0 / log_n).epsilon(1e-12));
    CHECK(rep.ratio == doctest::Approx(5000.0 / rep.main_term).epsilon(1e-12));
    CHECK(rep.error_budget
          == doctest::Approx(std::log(log_n) * std::log(log_n) / log_n).epsilon(1e-12));
    CHECK_THROWS_AS(main_term_report(2, 1, c), std::invalid_argument);
}

TEST_CASE("ratio_table walks ascending caps") {
    PrimeSieve sieve(1100);
    SingularConstant c = singular_series_constant(10000);
    std::vector<u64> caps = {1000, 10000, 1000000};
    std::vector<MainTermReport> table = ratio_table(caps, sieve, c);
    REQUIRE(table.size() == 3);
    for (std::size_t i = 0; i < caps.size(); ++i) {
        CHECK(table[i].n_limit == caps[i]);
        PairStats stats = pair_stats(caps[i], sieve);
        CHECK(table[i].sum_tau == stats.sum_tau);
        MainTermReport direct = main_term_report(caps[i], stats.sum_tau, c);
        CHECK(table[i].ratio == doctest::Approx(direct.ratio));
    }
    CHECK_THROWS_AS(ratio_table({10000, 1000}, sieve, c), std::invalid_argument);
}

TEST_CASE("pair count tracks pi N / log^2 N") {
    PrimeSieve sieve(1100);
    PairCountCheck chk = pair_count_check(1000000, sieve);
    CHECK(chk.pair_count == pair_stats(1000000, sieve).pair_count);
    CHECK(chk.expected
          == doctest::Approx(std::numbers::pi * 1e6 / std::pow(std::log(1e6), 2)).epsilon(1e-12));
    CHECK(chk.ratio == doctest::Approx(static_cast<double>(chk.pair_count) / chk.expected));
    CHECK(chk.budget > 0.0);
    CHECK(chk.pass == (std::abs(chk.ratio - 1.0) <= chk.budget));
    CHECK(chk.pass);
    CHECK_THROWS_AS(pair_count_check(999, sieve), std::invalid_argument);
}

TEST_CASE("pair counts and divisor sums grow monotonically") {
    PrimeSieve sieve(400);
    u64 prev_pairs = 0;
    u64 prev_tau = 0;
    for (u64 n = 8; n <= 20000; n = n * 3 + 1) {
        PairStats stats = pair_stats(n, sieve);
        CHECK(stats.pair_count >= prev_pairs);
        CHECK(stats.sum_tau >= prev_tau);
        prev_pairs = stats.pair_count;
        prev_tau = stats.sum_tau;
    }
}
