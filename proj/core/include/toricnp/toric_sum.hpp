#pragma once

// Exact toric exponential sums
//   S = sum_{x, y in F*_{p^k}} zeta_p^{tr(c1 x^n + c2 y + c3 t / (x y))}
// returned as cyclotomic integers.

#include "toricnp/cyclo.hpp"
#include "toricnp/gf.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace toricnp::oracle {

using cyclo::CycInt;

struct SumSpec {
    int n = 2;
    int p = 3;
    int k = 1;             // extension degree
    std::int64_t c1 = 1;   // coefficient of x^n
    std::int64_t c2 = 1;   // coefficient of y
    std::int64_t c3 = 1;   // coefficient of t/(xy)
    std::int64_t t = 1;    // residue in 1..p-1
};

enum class Algorithm { naive, convolution };

struct EngineOptions {
    unsigned threads = 1;
    /// Upper bound on transform buffers in GiB; 0 means unlimited.
    double mem_budget_gb = 0.0;
};

/// Domain limits: naive needs p^{2k} <= 1e9,
/// convolution p^k <= 1e8.
constexpr std::uint64_t kNaivePairLimit = 1'000'000'000ULL;
/// Above this p the naive path skips the shared p x p table.
constexpr int kNaiveJointMaxPrime = 4096;
constexpr std::uint64_t kConvolutionFieldLimit = 100'000'000ULL;

/// Throws std::invalid_argument on p | n, bad residues, or an out-of-domain size.
void validate(const SumSpec& spec, Algorithm algorithm);

/// Shared per-(p, k) state: the field and the trace table tr(g^i).
class SumContext {
public:
    SumContext(int p, int k);

    const gf::FiniteField& field() const { return field_; }
    int p() const { return p_; }
    int k() const { return k_; }
    /// tr(g^i) for 0 <= i < p^k - 1.
    const std::vector<std::uint16_t>& traces() const { return traces_; }

    /// Histograms M_v = #{(x, y) : tr(f(x, y)) = v}, one per entry of
    /// `c3t` (the product c3 * t), for fixed n, c1, c2.
    std::vector<std::vector<std::uint64_t>> histograms(int n, std::int64_t c1, std::int64_t c2,
                                                       std::span<const std::int64_t> c3t, Algorithm algorithm,
                                                       const EngineOptions& options = {}) const;

private:
    std::vector<std::vector<std::uint64_t>> naive(int n, std::int64_t c1, std::int64_t c2,
                                                  std::span<const std::int64_t> c3t) const;
    std::vector<std::vector<std::uint64_t>> convolution(int n, std::int64_t c1, std::int64_t c2,
                                                        std::span<const std::int64_t> c3t,
                                                        const EngineOptions& options) const;

    int p_;
    int k_;
    gf::FiniteField field_;
    std::vector<std::uint16_t> traces_;
};

std::vector<std::uint64_t> toric_histogram(const SumSpec& spec, Algorithm algorithm, const EngineOptions& options = {});

CycInt toric_sum(const SumSpec& spec, Algorithm algorithm, const EngineOptions& options = {});

}  // namespace toricnp::oracle
