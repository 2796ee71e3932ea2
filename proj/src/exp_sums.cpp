#include "titch/exp_sums.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace titch {

using u64 = std::uint64_t;
using i64 = std::int64_t;

double eps_abs(u64 m) { return 1e-6 * std::sqrt(static_cast<double>(m)); }

Complex unit_phase(u64 num, u64 den) {
    double angle = 2.0 * std::numbers::pi * (static_cast<double>(num % den) / static_cast<double>(den));
    return {std::cos(angle), std::sin(angle)};
}

Complex sqrt_d_star(u64 d) {
    if (d % 2 == 0) throw std::domain_error("sqrt_d_star: d must be odd");
    double r = std::sqrt(static_cast<double>(d));
    return d % 4 == 1 ? Complex(r, 0.0) : Complex(0.0, r);
}

namespace {

// h reduced into [0, m).
u64 reduce_mod(i64 h, u64 m) {
    i64 sm = static_cast<i64>(m);
    return static_cast<u64>((h % sm + sm) % sm);
}

u64 prime_power(u64 l, std::uint32_t k) {
    u64 pk = 1;
    for (std::uint32_t i = 0; i < k; ++i) pk *= l;
    return pk;
}

}  // namespace

Complex gauss_sum_direct(u64 a, i64 b, u64 d) {
    if (d == 0) throw std::invalid_argument("gauss_sum_direct: d must be positive");
    u64 am = a % d;
    u64 bm = reduce_mod(b, d);
    Complex sum(0.0, 0.0);
    for (u64 n = 0; n < d; ++n) {
        u64 r = (mul_mod(am, mul_mod(n, n, d), d) + mul_mod(bm, n, d)) % d;
        sum += unit_phase(r, d);
    }
    return sum;
}

Complex gauss_sum_closed(u64 a, i64 b, u64 d) {
    if (d % 2 == 0) throw std::domain_error("gauss_sum_closed: d must be odd");
    if (std::gcd(a % d, d) != 1) throw std::domain_error("gauss_sum_closed: gcd(a, d) must be 1");
    if (d == 1) return {1.0, 0.0};

    FactoredInteger f = factorize(d);
    Complex result(1.0, 0.0);
    for (const auto& [p, k] : f.factors) {
        u64 pk = prime_power(p, k);
        u64 cof = d / pk;
        u64 a_loc = mul_mod(a % pk, cof % pk, pk);

        // S(1, 0; p^k): p^(k/2) for even k, p^((k-1)/2) sqrt(p*) for odd k.
        u64 half = prime_power(p, k / 2);
        Complex s10 = (k % 2 == 0) ? Complex(static_cast<double>(half), 0.0)
                                   : static_cast<double>(half) * sqrt_d_star(p);

        // Completing the square leaves the twist e(-(4 a_loc)^-1 b^2 / p^k).
        u64 bm = reduce_mod(b, pk);
        u64 inv4a = inv_mod(mul_mod(4 % pk, a_loc, pk), pk);
        u64 phase = mul_mod(mul_mod(bm, bm, pk), inv4a, pk);

        int jac = jacobi(static_cast<i64>(a_loc), pk);
        result *= static_cast<double>(jac) * s10 * std::conj(unit_phase(phase, pk));
    }
    return result;
}

Complex kloosterman_sum(i64 a, i64 b, u64 m) {
    if (m == 0) throw std::invalid_argument("kloosterman_sum: m must be positive");
    u64 am = reduce_mod(a, m);
    u64 bm = reduce_mod(b, m);
    Complex sum(0.0, 0.0);
    for (u64 x = 0; x < m; ++x) {
        if (std::gcd(x, m) != 1) continue;
        u64 xinv = inv_mod(x, m);
        u64 r = (mul_mod(am, x, m) + mul_mod(bm, xinv, m)) % m;
        sum += unit_phase(r, m);
    }
    if (std::abs(sum.imag()) > eps_abs(m)) {
        throw std::logic_error("kloosterman_sum: imaginary part did not cancel");
    }
    return sum;
}

KloostermanBound kloosterman_bound_check(i64 a, i64 b, u64 m) {
    KloostermanBound rep;
    rep.a = a;
    rep.b = b;
    rep.m = m;
    rep.magnitude = std::abs(kloosterman_sum(a, b, m));
    u64 g = std::gcd(std::gcd(static_cast<u64>(std::llabs(a)), static_cast<u64>(std::llabs(b))), m);
    rep.bound = static_cast<double>(tau(factorize(m))) *
                std::sqrt(static_cast<double>(g)) * std::sqrt(static_cast<double>(m));
    rep.pass = rep.magnitude <= rep.bound + 1e-6;
    return rep;
}

Complex salie_sum_direct(u64 m, u64 n, u64 d) {
    if (d % 2 == 0) throw std::domain_error("salie_sum_direct: d must be odd");
    u64 mm = m % d;
    u64 nm = n % d;
    Complex sum(0.0, 0.0);
    for (u64 x = 0; x < d; ++x) {
        int chi = jacobi(static_cast<i64>(x), d);
        if (chi == 0) continue;  // non-units carry symbol 0 (never hit for d = 1)
        u64 xinv = inv_mod(x, d);
        u64 r = (mul_mod(mm, xinv, d) + mul_mod(nm, x, d)) % d;
        sum += static_cast<double>(chi) * unit_phase(r, d);
    }
    return sum;
}

Complex salie_sum_closed(u64 m, u64 n, u64 d) {
    if (d % 2 == 0) throw std::domain_error("salie_sum_closed: d must be odd");
    if (std::gcd(m % d, d) != 1 || std::gcd(n % d, d) != 1) {
        throw std::domain_error("salie_sum_closed: gcd(d, 2mn) must be 1");
    }
    if (d == 1) return {1.0, 0.0};

    FactoredInteger f = factorize(d);

    // A root a of a^2 = mn (mod d), assembled prime power by prime power; the
    // sum below is even in each local root, so the choice does not matter.
    std::vector<std::pair<u64, u64>> congruences;
    std::vector<u64> powers;
    for (const auto& [l, k] : f.factors) {
        u64 pk = prime_power(l, k);
        u64 c = mul_mod(m % pk, n % pk, pk);
        std::vector<u64> roots = sqrt_mod_prime_power(c, l, k);
        if (roots.empty()) return {0.0, 0.0};  // mn is not a square mod l^k
        congruences.emplace_back(roots.front(), pk);
        powers.push_back(pk);
    }
    u64 a = crt_combine(congruences).value;
    Complex fsum = salie_factorization_sum(a, d);
    return sqrt_d_star(d) * static_cast<double>(jacobi(static_cast<i64>(n % d), d)) * fsum;
}

Complex salie_factorization_sum(u64 a, u64 d) {
    if (d == 0 || d % 2 == 0) throw std::domain_error("salie_factorization_sum: d must be odd");
    FactoredInteger f = factorize(d);
    std::vector<u64> powers;
    for (const auto& [l, k] : f.factors) powers.push_back(prime_power(l, k));

    // Coprime factorizations r s = d are subsets of the prime powers.
    Complex fsum(0.0, 0.0);
    std::size_t w = powers.size();
    for (u64 mask = 0; mask < (1ULL << w); ++mask) {
        u64 r = 1;
        for (std::size_t i = 0; i < w; ++i) {
            if (mask & (1ULL << i)) r *= powers[i];
        }
        u64 s = d / r;
        u64 t1 = (s > 1) ? mul_mod(2 * (a % s) % s, inv_mod(r % s, s), s) : 0;
        u64 t2 = (r > 1) ? mul_mod(2 * (a % r) % r, inv_mod(s % r, r), r) : 0;
        fsum += unit_phase(t1, s == 1 ? 1 : s) * std::conj(unit_phase(t2, r == 1 ? 1 : r));
    }
    return fsum;
}

int prime_power_unit_sum(u64 l, std::uint32_t k) {
    if (!is_prime_u64(l)) throw std::invalid_argument("prime_power_unit_sum: l must be prime");
    if (k == 0) throw std::invalid_argument("prime_power_unit_sum: k must be >= 1");
    // Over a full residue system mod M the terms e(a / M) sum to M [M = 1].
    // Units mod l^k are the full system minus the multiples of l, and the
    // multiples of l reproduce the full system mod l^(k-1):
    //   sum_units = full(l^k) - full(l^(k-1)) = 0 - [k = 1].
    return k == 1 ? -1 : 0;
}

namespace {

// x = r1 (mod m1), x = r2 (mod m2) for coprime m1, m2; value mod m1 m2.
u64 crt_pair(u64 r1, u64 m1, u64 r2, u64 m2) {
    u64 delta = (r2 % m2 + m2 - r1 % m2) % m2;
    u64 t = mul_mod(delta, inv_mod(m1 % m2, m2), m2);
    return r1 + m1 * t;
}

// Literal conic sum at modulus m with twists already reduced into [0, m).
// Odd m recovers the admissible v per u from prime power square roots; even
// m walks a residue table instead (no square root theory at the prime 2).
Complex conic_sum_modulus(u64 e1, u64 e2, u64 h1m, u64 h2m, u64 m) {
    if (m == 1) return {1.0, 0.0};
    u64 e1sq = mul_mod(e1 % m, e1 % m, m);
    u64 e2sq = mul_mod(e2 % m, e2 % m, m);
    Complex total(0.0, 0.0);

    if (m % 2 == 1) {
        FactoredInteger f = factorize(m);
        std::vector<std::pair<u64, std::uint32_t>> pps(f.factors.begin(), f.factors.end());
        std::vector<u64> pk_values;
        for (const auto& [l, k] : pps) pk_values.push_back(prime_power(l, k));
        u64 inv_e2sq = inv_mod(e2sq, m);

        std::vector<std::pair<u64, u64>> combos, next;
        for (u64 u = 1; u <= m; ++u) {
            if (std::gcd(u, m) != 1) continue;
            u64 c = (2 * m - 1 - mul_mod(e1sq, mul_mod(u, u, m), m)) % m;  // -1 - e1^2 u^2
            c = mul_mod(c, inv_e2sq, m);

            // Solutions of v^2 = c joined across prime powers; v must stay a
            // unit, so roots divisible by l are discarded.
            combos.assign(1, {0, 1});
            bool solvable = true;
            for (std::size_t i = 0; i < pps.size() && solvable; ++i) {
                u64 pk = pk_values[i];
                std::vector<u64> roots = sqrt_mod_prime_power(c % pk, pps[i].first, pps[i].second);
                next.clear();
                for (u64 x : roots) {
                    if (x % pps[i].first == 0) continue;
                    for (const auto& [v0, m0] : combos) {
                        next.emplace_back(crt_pair(v0, m0, x, pk), m0 * pk);
                    }
                }
                combos.swap(next);
                solvable = !combos.empty();
            }
            if (!solvable) continue;

            Complex up = unit_phase(mul_mod(u, h1m, m), m);
            for (const auto& [v, mod] : combos) {
                (void)mod;
                total += up * unit_phase(mul_mod(v, h2m, m), m);
            }
        }
    } else {
        // Buckets of (e2 v)^2 mod m over units v.
        std::vector<std::vector<std::uint32_t>> buckets(m);
        for (u64 v = 1; v <= m; ++v) {
            if (std::gcd(v, m) != 1) continue;
            u64 key = mul_mod(e2sq, mul_mod(v % m, v % m, m), m);
            buckets[key].push_back(static_cast<std::uint32_t>(v % m));
        }
        for (u64 u = 1; u <= m; ++u) {
            if (std::gcd(u, m) != 1) continue;
            u64 key = (2 * m - 1 - mul_mod(e1sq, mul_mod(u, u, m), m)) % m;
            if (buckets[key].empty()) continue;
            Complex up = unit_phase(mul_mod(u, h1m, m), m);
            for (u64 v : buckets[key]) total += up * unit_phase(mul_mod(v, h2m, m), m);
        }
    }
    return total;
}

void validate_conic_params(const ExpSumParams& p) {
    if (p.d == 0) throw std::invalid_argument("conic sum: d must be positive");
    if (std::gcd(p.e1 % p.d, p.d) != 1 || std::gcd(p.e2 % p.d, p.d) != 1) {
        throw std::domain_error("conic sum: gcd(e1 e2, d) must be 1");
    }
}

}  // namespace

Complex conic_exp_sum_direct(const ExpSumParams& p) {
    validate_conic_params(p);
    if (p.d > 10000ULL) {
        throw std::length_error("conic_exp_sum_direct: d > 1e4, use conic_exp_sum_crt");
    }
    return conic_sum_modulus(p.e1, p.e2, reduce_mod(p.h1, p.d), reduce_mod(p.h2, p.d), p.d);
}

Complex conic_exp_sum_crt(const ExpSumParams& p) {
    validate_conic_params(p);
    if (p.d == 1) return {1.0, 0.0};
    FactoredInteger f = factorize(p.d);
    Complex prod(1.0, 0.0);
    for (const auto& [l, k] : f.factors) {
        u64 pk = prime_power(l, k);
        u64 cof_inv = inv_mod((p.d / pk) % pk, pk);
        u64 h1l = mul_mod(reduce_mod(p.h1, pk), cof_inv, pk);
        u64 h2l = mul_mod(reduce_mod(p.h2, pk), cof_inv, pk);
        prod *= conic_sum_modulus(p.e1, p.e2, h1l, h2l, pk);
    }
    return prod;
}

SweepResult conic_bound_sweep(u64 d_max, u64 samples, u64 seed) {
    if (d_max < 2 || d_max > 10000ULL) {
        throw std::invalid_argument("conic_bound_sweep: d_max must lie in [2, 1e4]");
    }
    SplitMix64 rng(seed);
    SweepResult result;
    result.seed = seed;
    result.reports.reserve(samples);

    for (u64 i = 0; i < samples; ++i) {
        u64 d = 2 + rng.below(d_max - 1);
        u64 e1 = 0, e2 = 0;
        do {
            e1 = 1 + rng.below(50);
        } while (std::gcd(e1, d) != 1);
        do {
            e2 = 1 + rng.below(50);
        } while (std::gcd(e2, d) != 1);
        i64 h1 = 0, h2 = 0;
        do {
            h1 = static_cast<i64>(rng.below(2 * d + 1)) - static_cast<i64>(d);
            h2 = static_cast<i64>(rng.below(2 * d + 1)) - static_cast<i64>(d);
        } while (h1 == 0 && h2 == 0);

        BoundReport rep;
        rep.params = {e1, e2, h1, h2, d};
        rep.value = conic_exp_sum_crt(rep.params);
        rep.omega_d = omega(factorize(d));
        u64 g = std::gcd(std::gcd(static_cast<u64>(std::llabs(h1)), static_cast<u64>(std::llabs(h2))), d);
        rep.magnitude = std::abs(rep.value);
        rep.normalizer = std::sqrt(static_cast<double>(g) * static_cast<double>(d));
        rep.ratio = rep.magnitude / rep.normalizer;
        rep.implied_c = rep.omega_d > 0 ? std::pow(rep.ratio, 1.0 / rep.omega_d) : rep.ratio;
        result.reports.push_back(rep);
    }

    std::sort(result.reports.begin(), result.reports.end(),
              [](const BoundReport& x, const BoundReport& y) {
                  auto key = [](const BoundReport& r) {
                      return std::tuple(r.params.d, r.params.e1, r.params.e2, r.params.h1,
                                        r.params.h2);
                  };
                  return key(x) < key(y);
              });
    for (const BoundReport& r : result.reports) result.c_est = std::max(result.c_est, r.implied_c);
    return result;
}

}  // namespace titch
