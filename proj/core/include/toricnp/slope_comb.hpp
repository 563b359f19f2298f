#pragma once

// Slope combinatorics for f_t = x^n + y + t/(xy): the residues alpha(i,j),
// the permutation g, minimal assignments N_m and their differences B_m, the
// determinant and factorial hypotheses on p, and the predicted Newton polygon.

#include "toricnp/polygon.hpp"
#include "toricnp/rational.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toricnp::slopes {

struct FamilyParams {
    int n = 2;
    std::int64_t p = 3;
    int a = 1;                  // q = p^a
    std::int64_t t_residue = 1; // class of t in 1..p-1
};

/// Throws std::invalid_argument unless n >= 2, p is prime, p does not divide
/// n, a >= 1 and 1 <= t_residue <= p-1.
void validate(const FamilyParams& params);

/// i - p*j + n*ceil((p*j - i)/n), i.e. (i - p*j) mod n in [0, n-1].
std::int64_t alpha(int n, std::int64_t p, std::int64_t i, std::int64_t j);

/// The inverse of p modulo n, taken in [1, n-1].
int varpi(int n, std::int64_t p);

/// g(0..2n). Fixes 0, n, 2n; otherwise multiplies by varpi modulo n inside
/// the blocks [1, n-1] and [n+1, 2n-1].
std::vector<int> g_map(int n, std::int64_t p);

struct AssignmentResult {
    int m = 0;
    std::int64_t N = 0;
    /// Number of minimizing permutations; only known when exhaustive search ran.
    std::optional<std::int64_t> minimizer_count;
    std::vector<int> witness;
};

/// Minimum of sum_i alpha(i, delta(i)) over permutations of {0..m-1}.
/// Hungarian method always; cross-checked by exhaustive search for m <= 9.
AssignmentResult minimal_assignment(int n, std::int64_t p, int m);

/// Exhaustive minimum-cost search (used for the minimizer count).
AssignmentResult minimal_assignment_exhaustive(int n, std::int64_t p, int m);

/// Minimum-cost perfect matching of a square cost matrix, O(m^3).
/// Returns (cost, assignment row -> column).
std::pair<std::int64_t, std::vector<int>> hungarian(const std::vector<std::vector<std::int64_t>>& cost);

/// B_m = N_{m+1} - N_m for 0 <= m <= n, with N_0 = 0.
std::vector<std::int64_t> b_sequence(int n, std::int64_t p);

struct VandermondeLevel {
    int m = 0;
    bool all_nonzero = true;
    mpz_class max_abs_det;  // M_n(m)
};

struct Assumption14Report {
    int n = 0;
    std::vector<VandermondeLevel> per_m;  // m = 0..n-1
    bool overall = true;
};

/// Row r, column c: prod_{j<c} (x_r - j)^2.
std::vector<std::vector<mpz_class>> vandermonde_like(const std::vector<int>& xs);

/// Exact determinant (fraction-free Bareiss elimination).
mpz_class determinant(std::vector<std::vector<mpz_class>> matrix);

/// Scans every subset of {0..n-1} of size m < n. Cached per n.
Assumption14Report vandermonde_report(int n);

struct Assumption16Result {
    bool ok = true;
    std::vector<int> ord;  // ord[k-1] = ord_p((k-1)!(p-k)! - (-1)^k), k = 1..n-1
};

Assumption16Result assumption16(int n, std::int64_t p);

/// p-adic valuation of a nonzero integer.
int ord_p(const mpz_class& value, std::int64_t p);

struct PrimeBounds {
    mpz_class thm15;         // max(M_n(0..n-1), 2n^3 - n^2 - n + 1)
    std::int64_t thm17 = 0;  // 4n^4 + 4n^3 + 3n^2 + n + 1
};

/// Throws std::runtime_error when the determinant hypothesis fails for n.
PrimeBounds prime_bounds(int n);

struct PredictionReport {
    FamilyParams params;
    std::vector<std::int64_t> B;  // B_0..B_n
    PolygonData polygon;
    bool ordinary = false;        // p == 1 mod n
    mpz_class p_bound_thm15;
    std::int64_t p_bound_thm17 = 0;
    std::vector<std::string> warnings;
};

/// Slopes i/n + (2n+1)B_i/(n(p-1)) for i <= n and
/// i/n - (2n+1)B_{2n-i}/(n(p-1)) for i > n, in that order.
PredictionReport predicted_np(int n, std::int64_t p);

/// The unperturbed slope list {i/n : 0 <= i <= 2n}.
std::vector<Rational> hodge_slopes(int n);

}  // namespace toricnp::slopes
