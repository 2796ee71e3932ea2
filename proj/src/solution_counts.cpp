#include "titch/solution_counts.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace titch {

using u64 = std::uint64_t;

u64 solution_count_brute(u64 d) {
    if (d == 0) throw std::invalid_argument("solution_count_brute: d must be positive");
    if (d > 100000ULL) {
        throw std::length_error("solution_count_brute: d > 1e5, use solution_count_mult");
    }
    // square_hits[r] = #{v in [1, d] : gcd(v, d) = 1, v^2 = r (mod d)}.
    std::vector<std::uint32_t> square_hits(d, 0);
    for (u64 v = 1; v <= d; ++v) {
        if (std::gcd(v, d) != 1) continue;
        ++square_hits[v * v % d];
    }
    u64 count = 0;
    for (u64 u = 1; u <= d; ++u) {
        if (std::gcd(u, d) != 1) continue;
        u64 target = (2 * d - 1 - u * u % d) % d;  // (-1 - u^2) mod d
        count += square_hits[target];
    }
    return count;
}

u64 solution_count_mult(const FactoredInteger& d) {
    if (d.n % 2 == 0) throw std::domain_error("solution_count_mult: d must be odd");
    u64 s = 1;
    for (const auto& [l, k] : d.factors) {
        std::int64_t local =
            static_cast<std::int64_t>(l) - 2 - 3 * jacobi(-1, l);
        if (local <= 0) return 0;  // l = 5 pattern: no coprime solutions at all
        u64 piece = static_cast<u64>(local);
        for (std::uint32_t i = 1; i < k; ++i) piece *= l;
        s *= piece;
    }
    return s;
}

u64 count_v_solutions(u64 u, u64 d) {
    if (d % 2 == 0) throw std::domain_error("count_v_solutions: d must be odd");
    if (d == 1) return 1;
    u64 target = (2 * d - 1 - mul_mod(u % d, u % d, d)) % d;  // (-1 - u^2) mod d
    FactoredInteger f = factorize(d);
    u64 count = 1;
    for (const auto& [l, k] : f.factors) {
        u64 pk = 1;
        for (std::uint32_t i = 0; i < k; ++i) pk *= l;
        u64 coprime_roots = 0;
        for (u64 x : sqrt_mod_prime_power(target % pk, l, k)) {
            if (x % l != 0) ++coprime_roots;
        }
        if (coprime_roots == 0) return 0;
        count *= coprime_roots;
    }
    if (count > tau(f)) throw std::logic_error("count_v_solutions: exceeded divisor bound");
    return count;
}

double sum_s_over_phi_squared(double z) {
    if (!(z >= 1.0)) throw std::invalid_argument("sum_s_over_phi_squared: z must be >= 1");
    if (z > 2147483647.0) throw std::invalid_argument("sum_s_over_phi_squared: z too large");
    u64 zi = static_cast<u64>(z);

    // Smallest-prime-factor table so each odd d factors in O(log d).
    std::vector<std::uint32_t> spf(zi + 1, 0);
    for (u64 i = 2; i <= zi; ++i) {
        if (spf[i] != 0) continue;
        for (u64 j = i; j <= zi; j += i) {
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }

    double sum = 1.0;  // d = 1 term: s(1) = phi(1) = 1
    double comp = 0.0;
    for (u64 d = 3; d <= zi; d += 2) {
        u64 rem = d;
        u64 s = 1, phi = 1;
        while (rem > 1 && s > 0) {
            u64 l = spf[rem];
            std::uint32_t k = 0;
            while (rem % l == 0) {
                rem /= l;
                ++k;
            }
            std::int64_t local = static_cast<std::int64_t>(l) - 2 - 3 * jacobi(-1, l);
            if (local <= 0) {
                s = 0;
                break;
            }
            u64 s_piece = static_cast<u64>(local);
            u64 phi_piece = l - 1;
            for (std::uint32_t i = 1; i < k; ++i) {
                s_piece *= l;
                phi_piece *= l;
            }
            s *= s_piece;
            phi *= phi_piece;
        }
        if (s == 0) continue;
        double term = static_cast<double>(s) / (static_cast<double>(phi) * static_cast<double>(phi));
        // Kahan step.
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

SingularConstant singular_series_constant(u64 p_limit) {
    if (p_limit < 3 || p_limit > 1000000000ULL) {
        throw std::invalid_argument("singular_series_constant: p_limit must lie in [3, 1e9]");
    }
    PrimeSieve sieve(p_limit);
    double product = 1.0;
    for (u64 p : sieve.primes()) {
        if (p == 2) continue;
        double pd = static_cast<double>(p);
        double theta = (1.0 + 3.0 * pd * jacobi(-1, p)) / ((pd - 1.0) * (pd - 1.0) * pd);
        product *= 1.0 - theta;
    }
    return {p_limit, product, 4.0 / static_cast<double>(p_limit)};
}

double main_term_constant(const SingularConstant& c) {
    return std::numbers::pi / 4.0 * c.value;
}

}  // namespace titch
