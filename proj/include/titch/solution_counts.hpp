// Counting coprime solutions of u^2 + v^2 + 1 = 0 (mod d) and the Euler
// product built from those counts.
//
// s(d) denotes #{(u, v) in [1, d]^2 : u^2 + v^2 + 1 = 0 (mod d), gcd(uv, d) = 1}.
// It vanishes for even d, is multiplicative, and on odd prime powers equals
//   s(l^k) = l^(k-1) * (l - 2 - 3 * (-1 / l)).
#pragma once

#include <cstdint>
#include <vector>

#include "titch/arith.hpp"

namespace titch {

// Exact enumeration of s(d): one pass tabulating v^2 mod d over coprime v,
// one pass over coprime u.  Guarded to d <= 1e5 to keep the table bounded;
// larger d raise std::length_error (use solution_count_mult instead).
std::uint64_t solution_count_brute(std::uint64_t d);

// Multiplicative evaluation of s(d) from the factorization of an odd d.
// Even d raise std::domain_error.
std::uint64_t solution_count_mult(const FactoredInteger& d);

// Number of v mod d with u^2 + v^2 + 1 = 0 (mod d) and gcd(v, d) = 1, for an
// odd d; evaluated prime power by prime power through sqrt_mod_prime_power so
// it stays cheap inside sweeps.  Always <= 2^omega(d) <= tau(d).
std::uint64_t count_v_solutions(std::uint64_t u, std::uint64_t d);

// Compensated partial sum over odd d <= z of s(d) / phi(d)^2, accumulated in
// ascending d.  Grows like a constant times log z.
double sum_s_over_phi_squared(double z);

// Truncated Euler product over odd primes p <= p_limit of
//   1 - (1 + 3 p (-1 / p)) / ((p - 1)^2 p),
// together with a rigorous bound on the magnitude of the omitted log tail:
// each omitted factor is 1 - theta_p with |theta_p| <= 5 / p^2 for p >= 5 and
// |log(1 - theta_p)| <= 1.2 |theta_p|, so the tail is below 4 / p_limit for
// every p_limit >= 3.
struct SingularConstant {
    std::uint64_t p_limit = 0;
    double value = 0.0;
    double tail_bound = 0.0;
};

SingularConstant singular_series_constant(std::uint64_t p_limit);

// (pi / 4) times the Euler product: the constant in front of N / log N.
double main_term_constant(const SingularConstant& c);

}  // namespace titch
