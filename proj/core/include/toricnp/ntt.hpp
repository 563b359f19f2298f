#pragma once

// Number-theoretic transforms over word-size primes P < 2^62 in Montgomery form.

#include <cstdint>
#include <span>
#include <vector>

namespace toricnp::ntt {

using u64 = std::uint64_t;

/// Montgomery arithmetic modulo an odd P < 2^62 with R = 2^64.
class Montgomery {
public:
    explicit Montgomery(u64 modulus);

    u64 modulus() const { return p_; }
    u64 to_mont(u64 x) const { return mul(x % p_, r2_); }
    u64 from_mont(u64 x) const { return reduce(x); }
    u64 one() const { return one_; }

    u64 mul(u64 a, u64 b) const { return reduce(static_cast<unsigned __int128>(a) * b); }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 pow(u64 base, u64 exp) const;

private:
    u64 reduce(unsigned __int128 t) const {
        const u64 m = static_cast<u64>(t) * neg_inv_;
        const u64 r = static_cast<u64>((t + static_cast<unsigned __int128>(m) * p_) >> 64);
        return r >= p_ ? r - p_ : r;
    }

    u64 p_;
    u64 neg_inv_;  // -P^{-1} mod 2^64
    u64 r2_;       // 2^128 mod P
    u64 one_;      // 2^64 mod P
};

struct NttPrime {
    u64 modulus;
    u64 generator;  // primitive root mod P
};

/// Largest primes below 2^62 congruent to 1 mod (factor * 2^log_len), in
/// decreasing order.
std::vector<NttPrime> find_primes(u64 factor, int log_len, std::size_t count);

/// Power-of-two transform plan. Forward is decimation-in-frequency with
/// bit-reversed output; inverse takes bit-reversed input, so pointwise
/// products can be formed without reordering. Data is in Montgomery form.
class Plan {
public:
    Plan(const NttPrime& prime, int log_len);

    const Montgomery& arith() const { return mont_; }
    std::size_t size() const { return n_; }

    void forward(std::span<u64> a) const;
    /// Includes the 1/n scaling.
    void inverse(std::span<u64> a) const;

private:
    Montgomery mont_;
    int log_n_;
    std::size_t n_;
    std::vector<u64> roots_;      // roots_[len + j] = w_{2 len}^j
    std::vector<u64> inv_roots_;
    u64 inv_n_;
};

/// Cyclic convolution of two equal-length sequences of residues mod P,
/// via zero padding to a power of two. Inputs and output are plain residues.
std::vector<u64> cyclic_convolution(std::span<const u64> a, std::span<const u64> b, const NttPrime& prime);

/// Smallest L with 2^L >= n.
int ceil_log2(std::size_t n);

}  // namespace toricnp::ntt
