// Divisor sums over prime pairs: S(N) = sum of tau(p^2 + q^2 + 1) over
// ordered prime pairs with p^2 + q^2 <= N, its exact decomposition
//
//   S(N) = M1 + M2 - Q,
//   M1 = 2 #{(p, q, d) : d <= Z,            d | n, d^2 <= n},
//   M2 = 2 #{(p, q, d) : Z < d <= sqrt(N+1), d | n, d^2 <= n},
//   Q  = #{(p, q) : n a perfect square},          n = p^2 + q^2 + 1,
//
// which restates tau(n) = 2 #{d | n : d <= sqrt(n)} - [n square], and the
// comparison of S(N) against its main term (pi/4) C N / log N.
#pragma once

#include <cstdint>
#include <vector>

#include "titch/arith.hpp"
#include "titch/solution_counts.hpp"

namespace titch {

struct PairStats {
    std::uint64_t n_limit = 0;   // the cap N on p^2 + q^2
    std::uint64_t pair_count = 0;
    std::uint64_t sum_tau = 0;   // S(N)
};

// Exact enumeration of ordered prime pairs (p = q and p = 2 included).  tau
// is evaluated by trial division over the sieve primes with early exit; the
// sieve must cover isqrt(N).  Requires N >= 8 (the smallest admissible N).
PairStats pair_stats(std::uint64_t n_limit, const PrimeSieve& sieve);

struct DecompositionReport {
    std::uint64_t n_limit = 0;
    std::uint64_t z = 0;
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
    std::uint64_t q = 0;
    std::uint64_t s = 0;  // = m1 + m2 - q, checked on construction
};

// Splits the divisor sum at Z, 1 <= Z <= isqrt(N + 1).  The identity
// s = m1 + m2 - q is verified pair by pair and a violation throws.
DecompositionReport decompose(std::uint64_t n_limit, std::uint64_t z, const PrimeSieve& sieve);

// Number of ordered pairs whose p^2 + q^2 + 1 is a perfect square.
std::uint64_t square_value_count(std::uint64_t n_limit, const PrimeSieve& sieve);

struct MainTermReport {
    std::uint64_t n_limit = 0;
    std::uint64_t sum_tau = 0;
    double main_term = 0.0;     // (pi/4) C N / log N
    double ratio = 0.0;         // sum_tau / main_term
    double error_budget = 0.0;  // (log log N)^2 / log N
};

MainTermReport main_term_report(std::uint64_t n_limit, std::uint64_t sum_tau,
                                const SingularConstant& c);

// One MainTermReport per cap, ascending.
std::vector<MainTermReport> ratio_table(const std::vector<std::uint64_t>& caps,
                                        const PrimeSieve& sieve, const SingularConstant& c);

struct PairCountCheck {
    std::uint64_t n_limit = 0;
    std::uint64_t pair_count = 0;
    double expected = 0.0;  // pi N / log^2 N
    double ratio = 0.0;
    double budget = 0.0;    // K log log N / log N
    bool pass = false;
};

// Compares the pair count against pi N / log^2 N within K log log N / log N.
PairCountCheck pair_count_check(std::uint64_t n_limit, const PrimeSieve& sieve, double k = 5.0);

// Same comparison for a pair count already in hand (avoids re-enumeration).
PairCountCheck pair_count_check(std::uint64_t n_limit, std::uint64_t pair_count, double k);

}  // namespace titch
