#include "titch/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace titch {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 m) {
    if (m == 1) return 0;
    // Extended Euclid on (a mod m, m); track only the coefficient of a.
    std::int64_t t = 0, new_t = 1;
    u64 r = m, new_r = a % m;
    while (new_r != 0) {
        u64 q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        u64 tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw std::domain_error("inv_mod: argument not invertible");
    return t < 0 ? static_cast<u64>(t + static_cast<std::int64_t>(m)) : static_cast<u64>(t);
}

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && (static_cast<u128>(r) * r) > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(u64 n) {
    u64 r = isqrt(n);
    return r * r == n;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin; this base set is exact for all n < 2^64.
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

PrimeSieve::PrimeSieve(u64 limit) : limit_(limit) {
    if (limit < 2 || limit > 1000000000ULL) {
        throw std::invalid_argument("PrimeSieve: limit must lie in [2, 1e9]");
    }
    bits_.assign(limit / 64 + 1, 0);

    // Base primes up to sqrt(limit) by a plain byte sieve.
    u64 root = isqrt(limit);
    std::vector<char> base(root + 1, 1);
    base[0] = 0;
    if (root >= 1) base[1] = 0;
    for (u64 i = 2; i * i <= root; ++i) {
        if (!base[i]) continue;
        for (u64 j = i * i; j <= root; j += i) base[j] = 0;
    }
    std::vector<u64> base_primes;
    for (u64 i = 2; i <= root; ++i) {
        if (base[i]) base_primes.push_back(i);
    }

    // Segmented main pass writing into the shared bit table.
    const u64 seg = 1ULL << 20;
    std::vector<char> mark(seg);
    for (u64 low = 0; low <= limit; low += seg) {
        u64 high = std::min(low + seg - 1, limit);
        std::fill(mark.begin(), mark.begin() + static_cast<std::ptrdiff_t>(high - low + 1), 1);
        if (low == 0) {
            mark[0] = 0;
            mark[1] = 0;
        }
        for (u64 p : base_primes) {
            if (p * p > high) break;
            u64 start = std::max(p * p, (low + p - 1) / p * p);
            for (u64 j = start; j <= high; j += p) mark[j - low] = 0;
        }
        for (u64 n = low; n <= high; ++n) {
            if (!mark[n - low]) continue;
            bits_[n >> 6] |= 1ULL << (n & 63);
            primes_.push_back(static_cast<std::uint32_t>(n));
        }
    }
}

bool PrimeSieve::is_prime(u64 n) const {
    if (n > limit_) throw std::out_of_range("PrimeSieve::is_prime: beyond sieve limit");
    return (bits_[n >> 6] >> (n & 63)) & 1;
}

PrimeSieve build_sieve(u64 limit) { return PrimeSieve(limit); }

namespace {

// Brent's cycle variant of Pollard rho; n odd, composite, > 1.
u64 brent_pollard(u64 n, SplitMix64& rng) {
    while (true) {
        u64 c = 1 + rng.below(n - 1);
        u64 y = 1 + rng.below(n - 1);
        u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mul_mod(y, y, n) + c) % n;
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                u64 block = std::min<u64>(128, r - k);
                for (u64 i = 0; i < block; ++i) {
                    y = (mul_mod(y, y, n) + c) % n;
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += block;
            }
            r <<= 1;
        }
        if (g == n) {
            // Batch gcd overshot the cycle; replay one step at a time.
            g = 1;
            while (g == 1) {
                ys = (mul_mod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

void split_into_primes(u64 n, SplitMix64& rng, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 f = brent_pollard(n, rng);
    split_into_primes(f, rng, out);
    split_into_primes(n / f, rng, out);
}

}  // namespace

FactoredInteger factorize(u64 n, const PrimeSieve& sieve) {
    if (n == 0 || n > 0x7fffffffffffffffULL) {
        throw std::invalid_argument("factorize: n must lie in [1, 2^63 - 1]");
    }
    FactoredInteger f;
    f.n = n;
    u64 rem = n;
    for (u64 p : sieve.primes()) {
        if (p * p > rem) break;
        if (rem % p != 0) continue;
        std::uint32_t k = 0;
        while (rem % p == 0) {
            rem /= p;
            ++k;
        }
        f.factors.emplace_back(p, k);
    }
    if (rem > 1) {
        if (is_prime_u64(rem)) {
            f.factors.emplace_back(rem, 1);
        } else {
            SplitMix64 rng(0x7111c4a17f4a7c15ULL ^ rem);
            std::vector<u64> primes;
            split_into_primes(rem, rng, primes);
            std::sort(primes.begin(), primes.end());
            for (std::size_t i = 0; i < primes.size();) {
                std::size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                f.factors.emplace_back(primes[i], static_cast<std::uint32_t>(j - i));
                i = j;
            }
        }
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

FactoredInteger factorize(u64 n) {
    static const PrimeSieve shared(1ULL << 16);
    return factorize(n, shared);
}

u64 tau(const FactoredInteger& f) {
    u64 t = 1;
    for (const auto& [p, k] : f.factors) {
        (void)p;
        t *= k + 1;
    }
    return t;
}

u64 tau_via_sqrt(u64 n) {
    if (n == 0) throw std::invalid_argument("tau_via_sqrt: n must be positive");
    u64 r = isqrt(n);
    u64 below = 0;
    for (u64 d = 1; d <= r; ++d) {
        if (n % d == 0) ++below;
    }
    return 2 * below - (r * r == n ? 1 : 0);
}

u64 euler_phi(const FactoredInteger& f) {
    u64 t = 1;
    for (const auto& [p, k] : f.factors) {
        t *= p - 1;
        for (std::uint32_t i = 1; i < k; ++i) t *= p;
    }
    return t;
}

std::uint32_t omega(const FactoredInteger& f) {
    return static_cast<std::uint32_t>(f.factors.size());
}

std::vector<u64> divisors(const FactoredInteger& f) {
    std::vector<u64> divs{1};
    for (const auto& [p, k] : f.factors) {
        std::size_t old = divs.size();
        u64 pk = 1;
        for (std::uint32_t i = 1; i <= k; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

u64 r2(u64 n) {
    if (n == 0) throw std::invalid_argument("r2: n must be positive");
    auto chi = [](u64 d) -> int {
        switch (d % 4) {
            case 1: return 1;
            case 3: return -1;
            default: return 0;
        }
    };
    std::int64_t sum = 0;
    u64 r = isqrt(n);
    for (u64 d = 1; d <= r; ++d) {
        if (n % d != 0) continue;
        sum += chi(d);
        if (d != n / d) sum += chi(n / d);
    }
    if (sum < 0) throw std::logic_error("r2: negative character sum");
    return 4 * static_cast<u64>(sum);
}

int jacobi(std::int64_t a, u64 n) {
    if (n % 2 == 0) throw std::domain_error("jacobi: modulus must be odd");
    std::int64_t sn = static_cast<std::int64_t>(n);
    u64 x = static_cast<u64>((a % sn + sn) % sn);
    int result = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            u64 m8 = n % 8;
            if (m8 == 3 || m8 == 5) result = -result;
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) result = -result;
        x %= n;
    }
    return n == 1 ? result : 0;
}

std::int64_t d_star(u64 d) {
    if (d % 2 == 0) throw std::domain_error("d_star: argument must be odd");
    std::int64_t sd = static_cast<std::int64_t>(d);
    return d % 4 == 1 ? sd : -sd;
}

namespace {

// Tonelli-Shanks: square root of the quadratic residue a modulo an odd prime l.
u64 sqrt_mod_prime(u64 a, u64 l) {
    a %= l;
    if (a == 0) return 0;
    if (l % 4 == 3) return pow_mod(a, (l + 1) / 4, l);
    // Write l - 1 = q * 2^s with q odd.
    u64 q = l - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    // Smallest quadratic non-residue as the auxiliary generator.
    u64 z = 2;
    while (jacobi(static_cast<std::int64_t>(z), l) != -1) ++z;
    u64 m = static_cast<u64>(s);
    u64 c = pow_mod(z, q, l);
    u64 t = pow_mod(a, q, l);
    u64 r = pow_mod(a, (q + 1) / 2, l);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, l);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, l);
        m = i;
        c = mul_mod(b, b, l);
        t = mul_mod(t, c, l);
        r = mul_mod(r, b, l);
    }
    return r;
}

u64 checked_prime_power(u64 l, std::uint32_t k) {
    u64 m = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (m > 0xffffffffffffffffULL / l) {
            throw std::invalid_argument("sqrt_mod_prime_power: modulus overflows 64 bits");
        }
        m *= l;
    }
    return m;
}

}  // namespace

std::vector<u64> sqrt_mod_prime_power(u64 a, u64 l, std::uint32_t k) {
    if (l == 2) throw std::domain_error("sqrt_mod_prime_power: prime 2 not supported");
    if (l % 2 == 0 || !is_prime_u64(l)) {
        throw std::invalid_argument("sqrt_mod_prime_power: l must be an odd prime");
    }
    if (k == 0) throw std::invalid_argument("sqrt_mod_prime_power: k must be >= 1");
    u64 m = checked_prime_power(l, k);
    a %= m;

    if (a == 0) {
        // x^2 = 0 (mod l^k) <=> l^ceil(k/2) | x.
        u64 step = 1;
        for (std::uint32_t i = 0; i < (k + 1) / 2; ++i) step *= l;
        u64 count = 1;
        for (std::uint32_t i = 0; i < k / 2; ++i) count *= l;
        std::vector<u64> roots;
        roots.reserve(count);
        for (u64 t = 0; t < count; ++t) roots.push_back(t * step);
        return roots;
    }

    // Strip the exact power of l from a; odd exponents admit no square root.
    std::uint32_t e = 0;
    u64 unit = a;
    while (unit % l == 0) {
        unit /= l;
        ++e;
    }
    if (e % 2 != 0) return {};
    std::uint32_t half = e / 2;
    std::uint32_t rk = k - e;
    u64 rm = 1;
    for (std::uint32_t i = 0; i < rk; ++i) rm *= l;

    if (jacobi(static_cast<std::int64_t>(unit % l), l) != 1) return {};

    // Root modulo l, then Hensel steps up to l^rk.
    u64 root = sqrt_mod_prime(unit % l, l);
    u64 mod = l;
    for (std::uint32_t j = 1; j < rk; ++j) {
        u64 next = mod * l;
        u64 val = mul_mod(root, root, next);
        u64 diff = (unit % next + next - val) % next;
        // diff is divisible by l^j; correct the digit at position j.
        u64 t = mul_mod((diff / mod) % l, inv_mod(2 * root % l, l), l);
        root += t * mod;
        mod = next;
    }

    // Roots of x^2 = a are l^half * (+-root + s * l^rk), s = 0 .. l^half - 1.
    u64 scale = 1;
    for (std::uint32_t i = 0; i < half; ++i) scale *= l;
    std::vector<u64> roots;
    for (u64 z : {root, rm - root}) {
        for (u64 s = 0; s < scale; ++s) roots.push_back(scale * (z + s * rm) % m);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

CrtResult crt_combine(const std::vector<std::pair<u64, u64>>& congruences) {
    CrtResult acc;
    for (const auto& [r, m] : congruences) {
        if (m == 0) throw std::domain_error("crt_combine: zero modulus");
        if (std::gcd(acc.modulus, m) != 1) {
            throw std::domain_error("crt_combine: moduli not pairwise coprime");
        }
        if (acc.modulus > 0xffffffffffffffffULL / m) {
            throw std::overflow_error("crt_combine: modulus product overflows 64 bits");
        }
        // x = acc.value (mod acc.modulus), x = r (mod m).
        u64 delta = (r % m + m - acc.value % m) % m;
        u64 t = mul_mod(delta, inv_mod(acc.modulus % m, m), m);
        acc.value += acc.modulus * t;
        acc.modulus *= m;
    }
    return acc;
}

}  // namespace titch
