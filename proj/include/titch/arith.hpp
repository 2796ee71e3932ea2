// Integer arithmetic kernels: prime sieve, 64-bit factorization, divisor and
// representation counts, Jacobi symbols, square roots modulo odd prime powers,
// and CRT recombination.  Everything is deterministic; all modular products go
// through 128-bit intermediates so the full 64-bit range is safe.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace titch {

// Deterministic 64-bit generator (splitmix64).  Used instead of the standard
// distributions so that seeded sweeps produce identical streams on every
// platform and compiler.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, n); n > 0.  Multiply-shift reduction keeps the
    // stream deterministic and avoids implementation-defined distributions.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }
};

// (a * b) mod m and (a ^ e) mod m with 128-bit intermediates.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
// inv_mod(0, 1) == 0 so that the trivial modulus needs no special casing.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

// Floor square root, exact for the whole uint64 range.
std::uint64_t isqrt(std::uint64_t n);
bool is_perfect_square(std::uint64_t n);

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// Eratosthenes table over [0, limit], 2 <= limit <= 1e9.  Keeps both the
// packed bit table (membership queries) and the ascending list of primes
// (iteration); filled segment by segment to stay cache friendly.
class PrimeSieve {
  public:
    explicit PrimeSieve(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    // n must be <= limit(); throws std::out_of_range otherwise.
    bool is_prime(std::uint64_t n) const;

    const std::vector<std::uint32_t>& primes() const { return primes_; }

  private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> primes_;
};

PrimeSieve build_sieve(std::uint64_t limit);

// n together with its sorted prime factorization, n = prod p_i^k_i.
struct FactoredInteger {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
};

// Trial division by the sieve primes, then deterministic Miller-Rabin plus
// Brent's rho (fixed seed) for any remaining cofactor.  1 <= n <= 2^63 - 1.
FactoredInteger factorize(std::uint64_t n, const PrimeSieve& sieve);

// Convenience overload backed by a shared sieve of the first 2^16 integers.
FactoredInteger factorize(std::uint64_t n);

// tau(n) = prod (k_i + 1), the number of divisors.
std::uint64_t tau(const FactoredInteger& f);

// tau(n) recomputed from the divisor-pairing identity
//   tau(n) = 2 * #{d | n : d <= sqrt(n)} - [n is a perfect square],
// by direct scan of d <= sqrt(n).  Serves as an independent cross-check.
std::uint64_t tau_via_sqrt(std::uint64_t n);

// Euler phi and omega (number of distinct prime factors).
std::uint64_t euler_phi(const FactoredInteger& f);
std::uint32_t omega(const FactoredInteger& f);

// All divisors of n in ascending order.
std::vector<std::uint64_t> divisors(const FactoredInteger& f);

// r2(n): number of lattice points on x^2 + y^2 = n, evaluated through the
// character identity r2(n) = 4 * sum_{d | n} chi(d) with chi the nontrivial
// character mod 4.
std::uint64_t r2(std::uint64_t n);

// Jacobi symbol (a / n) for odd n >= 1; throws std::domain_error on even n.
int jacobi(std::int64_t a, std::uint64_t n);

// Signed square class d* = (-1)^((d-1)/2) * d of an odd d, the unique choice
// of sign making d* = +-d congruent to 1 mod 4.  Throws on even d.
std::int64_t d_star(std::uint64_t d);

// Complete sorted set of x mod l^k with x^2 = a (mod l^k); l an odd prime.
// Tonelli-Shanks at the prime level, Hensel lifting above it.  Inputs with
// l | a are supported (solution counts then grow with the power of l dividing
// a); l = 2 is rejected with std::domain_error.
std::vector<std::uint64_t> sqrt_mod_prime_power(std::uint64_t a, std::uint64_t l,
                                                std::uint32_t k);

// Simultaneous congruence x = r_i (mod m_i) for pairwise coprime moduli;
// returns {x, prod m_i}.  Non-coprime moduli raise std::domain_error.
struct CrtResult {
    std::uint64_t value = 0;
    std::uint64_t modulus = 1;
};

CrtResult crt_combine(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& congruences);

}  // namespace titch
