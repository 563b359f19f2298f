#include "toricnp/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toricnp::nt {

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::optional<u64> inv_mod(u64 a, u64 m) {
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) return std::nullopt;
    __int128 x = old_s % static_cast<__int128>(m);
    if (x < 0) x += m;
    return static_cast<u64>(x);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic below 3.3e24.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<PrimePower> factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: zero");
    std::vector<u64> primes;
    for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> result;
    for (u64 p : primes) {
        if (!result.empty() && result.back().prime == p) {
            ++result.back().exponent;
        } else {
            result.push_back({p, 1});
        }
    }
    return result;
}

u64 primitive_root(u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("primitive_root: modulus not prime");
    if (p == 2) return 1;
    const auto factors = factorize(p - 1);
    for (u64 g = 2;; ++g) {
        bool ok = std::all_of(factors.begin(), factors.end(),
                              [&](const PrimePower& f) { return pow_mod(g, (p - 1) / f.prime, p) != 1; });
        if (ok) return g;
    }
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
    u64 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
        result *= base;
    }
    return result;
}

}  // namespace toricnp::nt
