#pragma once

// Built-in check matrix for the `selftest` verb: cross-algorithm agreement
// and the invariants of every module on fixed parameters and seeds.

#include <functional>
#include <string>
#include <vector>

namespace toricnp::cli {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;   // first failure, or a short summary
    double seconds = 0.0;
};

struct SelftestOptions {
    unsigned threads = 1;
    /// Largest p^k in the naive-versus-convolution grid.
    unsigned long equivalence_field_limit = 1000;
    /// Primes up to this bound use every t; larger ones use t in {1, 2, (p-1)/2, p-1}.
    long exhaustive_t_prime_limit = 101;
};

std::vector<SelftestCheck> run_selftest(const SelftestOptions& options = {},
                                        const std::function<void(const SelftestCheck&)>& on_check = {});

}  // namespace toricnp::cli
