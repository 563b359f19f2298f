#include "toricnp/ntt.hpp"

#include "toricnp/numtheory.hpp"

#include <stdexcept>

namespace toricnp::ntt {

Montgomery::Montgomery(u64 modulus) : p_(modulus) {
    if (modulus % 2 == 0 || modulus >= (1ULL << 62)) throw std::invalid_argument("Montgomery: need odd P < 2^62");
    u64 inv = 1;  // Newton iteration for P^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - modulus * inv;
    neg_inv_ = ~inv + 1;
    one_ = static_cast<u64>((static_cast<unsigned __int128>(1) << 64) % modulus);
    r2_ = static_cast<u64>(static_cast<unsigned __int128>(one_) * one_ % modulus);
}

u64 Montgomery::pow(u64 base, u64 exp) const {
    u64 result = one_;
    while (exp > 0) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

std::vector<NttPrime> find_primes(u64 factor, int log_len, std::size_t count) {
    if (log_len < 0 || log_len > 40 || factor == 0) throw std::invalid_argument("find_primes: bad modulus shape");
    const unsigned __int128 step = static_cast<unsigned __int128>(factor) << log_len;
    if (step >= (1ULL << 61)) throw std::invalid_argument("find_primes: step too large for 62-bit primes");
    const u64 m = static_cast<u64>(step);
    std::vector<NttPrime> primes;
    for (u64 k = ((1ULL << 62) - 2) / m; k >= 1 && primes.size() < count; --k) {
        const u64 candidate = k * m + 1;
        if (nt::is_prime(candidate)) primes.push_back({candidate, nt::primitive_root(candidate)});
    }
    if (primes.size() < count) throw std::runtime_error("find_primes: not enough NTT primes");
    return primes;
}

int ceil_log2(std::size_t n) {
    int l = 0;
    while ((std::size_t{1} << l) < n) ++l;
    return l;
}

Plan::Plan(const NttPrime& prime, int log_len)
    : mont_(prime.modulus), log_n_(log_len), n_(std::size_t{1} << log_len) {
    const u64 P = prime.modulus;
    if ((P - 1) % n_ != 0) throw std::invalid_argument("Plan: 2^L does not divide P-1");
    roots_.assign(n_, 0);
    inv_roots_.assign(n_, 0);
    for (std::size_t len = 1; len < n_; len <<= 1) {
        const u64 w = mont_.to_mont(nt::pow_mod(prime.generator, (P - 1) / (2 * len), P));
        const u64 wi = mont_.pow(w, 2 * len - 1);
        u64 cur = mont_.one(), cur_i = mont_.one();
        for (std::size_t j = 0; j < len; ++j) {
            roots_[len + j] = cur;
            inv_roots_[len + j] = cur_i;
            cur = mont_.mul(cur, w);
            cur_i = mont_.mul(cur_i, wi);
        }
    }
    inv_n_ = mont_.to_mont(*nt::inv_mod(n_ % P, P));
}

void Plan::forward(std::span<u64> a) const {
    if (a.size() != n_) throw std::invalid_argument("Plan::forward: length mismatch");
    for (std::size_t len = n_ >> 1; len >= 1; len >>= 1) {
        const u64* w = roots_.data() + len;
        for (std::size_t i = 0; i < n_; i += 2 * len) {
            u64* x = a.data() + i;
            u64* y = x + len;
            for (std::size_t j = 0; j < len; ++j) {
                const u64 u = x[j], v = y[j];
                x[j] = mont_.add(u, v);
                y[j] = mont_.mul(mont_.sub(u, v), w[j]);
            }
        }
    }
}

void Plan::inverse(std::span<u64> a) const {
    if (a.size() != n_) throw std::invalid_argument("Plan::inverse: length mismatch");
    for (std::size_t len = 1; len < n_; len <<= 1) {
        const u64* w = inv_roots_.data() + len;
        for (std::size_t i = 0; i < n_; i += 2 * len) {
            u64* x = a.data() + i;
            u64* y = x + len;
            for (std::size_t j = 0; j < len; ++j) {
                const u64 u = x[j], v = mont_.mul(y[j], w[j]);
                x[j] = mont_.add(u, v);
                y[j] = mont_.sub(u, v);
            }
        }
    }
    for (auto& x : a) x = mont_.mul(x, inv_n_);
}

std::vector<u64> cyclic_convolution(std::span<const u64> a, std::span<const u64> b, const NttPrime& prime) {
    if (a.size() != b.size()) throw std::invalid_argument("cyclic_convolution: length mismatch");
    const std::size_t n = a.size();
    if (n == 0) return {};
    const int log_len = ceil_log2(2 * n - 1);
    Plan plan(prime, log_len);
    const auto& m = plan.arith();
    std::vector<u64> fa(plan.size(), 0), fb(plan.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        fa[i] = m.to_mont(a[i]);
        fb[i] = m.to_mont(b[i]);
    }
    plan.forward(fa);
    plan.forward(fb);
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] = m.mul(fa[i], fb[i]);
    plan.inverse(fa);
    std::vector<u64> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        u64 v = fa[i];
        if (i + n < fa.size()) v = m.add(v, fa[i + n]);
        out[i] = m.from_mont(v);
    }
    return out;
}

}  // namespace toricnp::ntt
