#include "titch/titchmarsh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace titch {

using u64 = std::uint64_t;

namespace {

void validate_cap(u64 n_limit, const PrimeSieve& sieve) {
    if (n_limit < 8) throw std::invalid_argument("pair enumeration: N must be >= 8");
    if (sieve.limit() < isqrt(n_limit)) {
        throw std::invalid_argument("pair enumeration: sieve must cover isqrt(N)");
    }
}

// Factorization of n by trial division over the sieve primes, early exit at
// p^2 > remainder.  Any surviving cofactor has no prime factor below the
// sieve limit L >= isqrt(N) and n <= N + 1, so it is prime, a prime square,
// or a product of two distinct primes.
struct SmallFactorization {
    std::pair<u64, std::uint32_t> entries[16];
    std::size_t size = 0;

    void push(u64 p, std::uint32_t k) { entries[size++] = {p, k}; }
};

void factor_by_trial(u64 n, const std::vector<std::uint32_t>& primes, SmallFactorization& out) {
    out.size = 0;
    u64 rem = n;
    for (u64 p : primes) {
        if (p * p > rem) break;
        if (rem % p != 0) continue;
        std::uint32_t k = 0;
        while (rem % p == 0) {
            rem /= p;
            ++k;
        }
        out.push(p, k);
    }
    if (rem > 1) {
        if (is_prime_u64(rem)) {
            out.push(rem, 1);
        } else {
            u64 r = isqrt(rem);
            if (r * r == rem) {
                out.push(r, 2);
            } else {
                // Two distinct primes, both beyond the trial range; the smaller
                // sits within a step or two of isqrt(rem), so scan down to it.
                u64 f = r;
                while (f >= 2 && rem % f != 0) --f;
                if (f < 2) throw std::logic_error("factor_by_trial: cofactor not split");
                out.push(f, 1);
                out.push(rem / f, 1);
            }
        }
    }
}

u64 tau_of(const SmallFactorization& f) {
    u64 t = 1;
    for (std::size_t i = 0; i < f.size; ++i) t *= f.entries[i].second + 1;
    return t;
}

}  // namespace

PairStats pair_stats(u64 n_limit, const PrimeSieve& sieve) {
    validate_cap(n_limit, sieve);
    const auto& primes = sieve.primes();
    PairStats stats;
    stats.n_limit = n_limit;
    SmallFactorization f;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        u64 p = primes[i];
        u64 p2 = p * p;
        if (2 * p2 > n_limit) break;  // even the pair (p, p) no longer fits
        for (std::size_t j = i; j < primes.size(); ++j) {
            u64 q = primes[j];
            u64 value = p2 + q * q;
            if (value > n_limit) break;
            factor_by_trial(value + 1, primes, f);
            u64 weight = (i == j) ? 1 : 2;  // unordered enumeration, ordered counts
            stats.pair_count += weight;
            stats.sum_tau += weight * tau_of(f);
        }
    }
    return stats;
}

DecompositionReport decompose(u64 n_limit, u64 z, const PrimeSieve& sieve) {
    validate_cap(n_limit, sieve);
    u64 root_cap = isqrt(n_limit + 1);
    if (z < 1 || z > root_cap) {
        throw std::domain_error("decompose: Z must lie in [1, isqrt(N + 1)]");
    }

    const auto& primes = sieve.primes();
    DecompositionReport rep;
    rep.n_limit = n_limit;
    rep.z = z;

    SmallFactorization f;
    std::vector<u64> divs;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        u64 p = primes[i];
        u64 p2 = p * p;
        if (2 * p2 > n_limit) break;
        for (std::size_t j = i; j < primes.size(); ++j) {
            u64 q = primes[j];
            u64 value = p2 + q * q;
            if (value > n_limit) break;
            u64 n = value + 1;
            u64 weight = (i == j) ? 1 : 2;

            factor_by_trial(n, primes, f);
            divs.assign(1, 1);
            for (std::size_t fi = 0; fi < f.size; ++fi) {
                std::size_t old = divs.size();
                u64 pk = 1;
                for (std::uint32_t e = 0; e < f.entries[fi].second; ++e) {
                    pk *= f.entries[fi].first;
                    for (std::size_t di = 0; di < old; ++di) divs.push_back(divs[di] * pk);
                }
            }

            u64 root = isqrt(n);
            bool square = root * root == n;
            u64 below_z = 0, below_root = 0;
            for (u64 dv : divs) {
                if (dv > root) continue;
                ++below_root;
                if (dv <= z) ++below_z;
            }

            // Divisor pairing: tau(n) = 2 #{d <= sqrt(n)} - [n square].
            if (divs.size() != 2 * below_root - (square ? 1 : 0)) {
                throw std::logic_error("decompose: divisor pairing identity failed");
            }

            rep.m1 += 2 * weight * below_z;
            rep.m2 += 2 * weight * (below_root - below_z);
            rep.q += weight * (square ? 1 : 0);
            rep.s += weight * divs.size();
        }
    }

    if (rep.s != rep.m1 + rep.m2 - rep.q) {
        throw std::logic_error("decompose: split does not recombine to the divisor sum");
    }
    return rep;
}

u64 square_value_count(u64 n_limit, const PrimeSieve& sieve) {
    validate_cap(n_limit, sieve);
    const auto& primes = sieve.primes();
    u64 count = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        u64 p = primes[i];
        u64 p2 = p * p;
        if (2 * p2 > n_limit) break;
        for (std::size_t j = i; j < primes.size(); ++j) {
            u64 q = primes[j];
            u64 value = p2 + q * q;
            if (value > n_limit) break;
            if (is_perfect_square(value + 1)) count += (i == j) ? 1 : 2;
        }
    }
    return count;
}

MainTermReport main_term_report(u64 n_limit, u64 sum_tau, const SingularConstant& c) {
    if (n_limit < 3) throw std::invalid_argument("main_term_report: N must be >= 3");
    MainTermReport rep;
    rep.n_limit = n_limit;
    rep.sum_tau = sum_tau;
    double nd = static_cast<double>(n_limit);
    double log_n = std::log(nd);
    rep.main_term = std::numbers::pi / 4.0 * c.value * nd / log_n;
    rep.ratio = static_cast<double>(sum_tau) / rep.main_term;
    double ll = std::log(log_n);
    rep.error_budget = ll * ll / log_n;
    return rep;
}

std::vector<MainTermReport> ratio_table(const std::vector<u64>& caps, const PrimeSieve& sieve,
                                        const SingularConstant& c) {
    std::vector<MainTermReport> table;
    u64 prev = 0;
    for (u64 cap : caps) {
        if (cap <= prev) throw std::invalid_argument("ratio_table: caps must ascend");
        prev = cap;
        PairStats stats = pair_stats(cap, sieve);
        table.push_back(main_term_report(cap, stats.sum_tau, c));
    }
    return table;
}

PairCountCheck pair_count_check(u64 n_limit, u64 pair_count, double k) {
    if (n_limit < 1000) throw std::invalid_argument("pair_count_check: N must be >= 1e3");
    PairCountCheck chk;
    chk.n_limit = n_limit;
    chk.pair_count = pair_count;
    double nd = static_cast<double>(n_limit);
    double log_n = std::log(nd);
    chk.expected = std::numbers::pi * nd / (log_n * log_n);
    chk.ratio = static_cast<double>(chk.pair_count) / chk.expected;
    chk.budget = k * std::log(log_n) / log_n;
    chk.pass = std::abs(chk.ratio - 1.0) <= chk.budget;
    return chk;
}

PairCountCheck pair_count_check(u64 n_limit, const PrimeSieve& sieve, double k) {
    if (n_limit < 1000) throw std::invalid_argument("pair_count_check: N must be >= 1e3");
    validate_cap(n_limit, sieve);
    const auto& primes = sieve.primes();
    u64 count = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        u64 p = primes[i];
        u64 p2 = p * p;
        if (2 * p2 > n_limit) break;
        for (std::size_t j = i; j < primes.size(); ++j) {
            u64 q = primes[j];
            if (p2 + q * q > n_limit) break;
            count += (i == j) ? 1 : 2;
        }
    }
    return pair_count_check(n_limit, count, k);
}

}  // namespace titch
