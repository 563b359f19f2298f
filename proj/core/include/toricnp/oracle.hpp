#pragma once

// Ground truth for the L-function of f_t: exact sums -> Newton identities ->
// functional-equation completion -> p-adic Newton polygon.

#include "toricnp/cyclo.hpp"
#include "toricnp/polygon.hpp"
#include "toricnp/rational.hpp"
#include "toricnp/toric_sum.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricnp::oracle {

/// Raised when exact arithmetic contradicts the theory (non-integral Newton
/// identity output, inexact completion division, failed cross-check).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The companion's usable coefficients are all zero.
class DegenerateCompletion : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// L(f, T)^{-1} = sum_j (-1)^j e_j T^j with e_0 = 1.
struct LPolynomial {
    int p = 0;
    int a = 1;  // q = p^a
    std::vector<CycInt> coeffs;  // e_0..e_D

    int degree() const;  // index of the last nonzero coefficient
};

/// e_0..e_K from S_1..S_K via k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} S_i.
std::vector<CycInt> lpoly_from_power_sums(int p, std::span<const CycInt> power_sums);

struct Completion {
    std::vector<CycInt> coeffs;  // e_0..e_{2n+1}
    int pivot = 0;               // companion index j used to solve for e_{2n+1}
    int cross_checks = 0;        // redundant index pairs verified
};

/// Uses e_j(companion) = q^{2j} e_{D-j}(f) / e_D(f), D = 2n+1, q = p, to
/// recover e_{K_f+1}..e_D of f from e_0..e_{K_f} of f and e_0..e_{K_c} of the
/// companion. Every other pair (i, D-i) with both sides known is verified.
Completion complete_by_functional_equation(int n, int p, std::span<const CycInt> e_f, std::span<const CycInt> e_c);

/// Companion of f_t under the root correspondence beta -> q^2 / beta:
/// f_{-t} for odd n, -x^n + y + t/(xy) for even n.
SumSpec companion_spec(const SumSpec& spec);

struct NewtonData {
    std::vector<std::optional<Rational>> coefficient_ords;  // ord_q e_k, nullopt for e_k = 0
    PolygonData polygon;
};

NewtonData newton_polygon_of(const LPolynomial& lpoly);

/// Largest | |beta| / q - 1 | over reciprocal roots under zeta -> exp(2 pi i / p).
double purity_deviation(const LPolynomial& lpoly);

enum class AlgorithmChoice { automatic, naive, convolution };

struct OracleOptions {
    AlgorithmChoice algorithm = AlgorithmChoice::automatic;
    EngineOptions engine;
    /// Compute f_t sums directly up to this k (at least n+1); values above n+1
    /// feed the direct-versus-completed comparison.
    int direct_k = 0;
};

struct OracleReport {
    int n = 0;
    int p = 0;
    std::int64_t t = 1;
    LPolynomial lpoly;
    std::vector<std::optional<Rational>> coefficient_ords;
    PolygonData polygon;
    PolygonData hodge;
    bool hodge_ok = false;

    /// Predicted polygon, when p > n.
    std::optional<PolygonData> predicted;
    /// True when p exceeds the prime bound, so the comparison is certified.
    bool prediction_applicable = false;
    std::optional<bool> prediction_match;  // set only when applicable
    std::optional<bool> informational_match;  // set when predicted exists but is not certified

    int pivot = 0;
    int cross_checks = 0;
    /// e_j computed directly beyond n+1, compared with completed values.
    int direct_compared = 0;
    /// e_{2n+2} = 0, when computed.
    std::optional<bool> degree_exact;
    double purity_deviation = 0.0;
    std::vector<std::string> warnings;
};

/// Full pipeline for several t at once (sums share transforms).
std::vector<OracleReport> oracle_np(int n, int p, std::span<const std::int64_t> ts, const OracleOptions& options = {});

OracleReport oracle_np(int n, int p, std::int64_t t, const OracleOptions& options = {});

}  // namespace toricnp::oracle
