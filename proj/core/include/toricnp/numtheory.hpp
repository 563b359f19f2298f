#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace toricnp::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m; nullopt when gcd(a, m) != 1.
std::optional<u64> inv_mod(u64 a, u64 m);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(u64 n);

struct PrimePower {
    u64 prime;
    int exponent;
};

/// Trial division followed by Pollard rho (Brent). Sorted by prime.
std::vector<PrimePower> factorize(u64 n);

/// Smallest generator of (Z/pZ)^* for prime p.
u64 primitive_root(u64 p);

/// base^exp, or nullopt on 64-bit overflow.
std::optional<u64> checked_pow(u64 base, unsigned exp);

}  // namespace toricnp::nt
