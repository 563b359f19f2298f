#include "toricnp/oracle.hpp"

#include "toricnp/geometry.hpp"
#include "toricnp/numtheory.hpp"
#include "toricnp/slope_comb.hpp"

#include <algorithm>
#include <map>

namespace toricnp::oracle {

namespace {

constexpr double kPurityTolerance = 1e-6;
// Below this many (x, y) pairs the naive loop beats building transforms.
constexpr std::uint64_t kNaivePreferredPairs = 1'000'000ULL;

std::uint64_t field_size(int p, int k) {
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) q *= static_cast<std::uint64_t>(p);
    return q;
}

Algorithm pick(AlgorithmChoice choice, int p, int k) {
    switch (choice) {
        case AlgorithmChoice::naive:
            return Algorithm::naive;
        case AlgorithmChoice::convolution:
            return Algorithm::convolution;
        case AlgorithmChoice::automatic:
            break;
    }
    const std::uint64_t q = field_size(p, k);
    return q * q <= kNaivePreferredPairs ? Algorithm::naive : Algorithm::convolution;
}

std::int64_t residue(std::int64_t v, int p) {
    const std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// One requested series of power sums S*_1..S*_{k_max} for c1 x^n + y + c3t/(xy).
struct Series {
    std::int64_t c3t;
    int k_max;
};

// out[i][k - 1] = S*_k for series i. Series with the same c1 share one pass
// per extension degree.
std::vector<std::vector<CycInt>> power_sums(int n, int p, std::int64_t c1, std::span<const Series> series,
                                            const OracleOptions& options) {
    int k_top = 0;
    for (const auto& s : series) k_top = std::max(k_top, s.k_max);

    std::vector<std::vector<CycInt>> out(series.size());
    for (int k = 1; k <= k_top; ++k) {
        std::vector<std::int64_t> distinct;
        for (const auto& s : series) {
            if (s.k_max >= k) distinct.push_back(residue(s.c3t, p));
        }
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::map<std::int64_t, std::size_t> slot;
        for (std::size_t i = 0; i < distinct.size(); ++i) slot[distinct[i]] = i;

        const SumContext ctx(p, k);
        const auto hist = ctx.histograms(n, c1, 1, distinct, pick(options.algorithm, p, k), options.engine);
        for (std::size_t i = 0; i < series.size(); ++i) {
            if (series[i].k_max < k) continue;
            const auto& h = hist[slot[residue(series[i].c3t, p)]];
            out[i].push_back(CycInt::from_counts(p, std::span<const std::uint64_t>(h)));
        }
    }
    return out;
}

}  // namespace

std::vector<OracleReport> oracle_np(int n, int p, std::span<const std::int64_t> ts, const OracleOptions& options) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (p < 3 || !nt::is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("p must be an odd prime");
    if (n % p == 0) throw std::invalid_argument("p must not divide n");
    if (ts.empty()) throw std::invalid_argument("no t values given");
    for (std::int64_t t : ts) {
        if (t < 1 || t >= p) throw std::invalid_argument("t must lie in 1..p-1");
    }

    const int D = 2 * n + 1;
    const int k_f = std::max(n + 1, options.direct_k);
    const int k_c = n;

    // Companion: f_{-t} for odd n (same c1, so it joins the f_t passes),
    // -x^n + y + t/(xy) for even n.
    const std::size_t T = ts.size();
    std::vector<Series> series;
    for (std::int64_t t : ts) series.push_back({t, k_f});
    std::vector<std::vector<CycInt>> sums_f, sums_c;
    if (n % 2 == 1) {
        for (std::int64_t t : ts) series.push_back({-t, k_c});
        auto all = power_sums(n, p, 1, series, options);
        sums_f.assign(std::make_move_iterator(all.begin()), std::make_move_iterator(all.begin() + T));
        sums_c.assign(std::make_move_iterator(all.begin() + T), std::make_move_iterator(all.end()));
    } else {
        sums_f = power_sums(n, p, 1, series, options);
        for (auto& s : series) s.k_max = k_c;
        sums_c = power_sums(n, p, -1, series, options);
    }

    const PolygonData hodge = geometry::hodge_polygon(n);
    std::optional<slopes::PredictionReport> prediction;
    bool applicable = false;
    if (p > n) {
        prediction = slopes::predicted_np(n, p);
        applicable = mpz_class(p) > prediction->p_bound_thm15;
    }

    std::vector<OracleReport> reports;
    for (std::size_t s = 0; s < ts.size(); ++s) {
        OracleReport r;
        r.n = n;
        r.p = p;
        r.t = ts[s];

        std::vector<CycInt> e_f = lpoly_from_power_sums(p, sums_f[s]);
        const std::vector<CycInt> e_c = lpoly_from_power_sums(p, sums_c[s]);

        Completion completion;
        try {
            completion = complete_by_functional_equation(
                n, p, std::span<const CycInt>(e_f.data(), static_cast<std::size_t>(n + 2)), e_c);
        } catch (const DegenerateCompletion& err) {
            if (field_size(p, D) > kConvolutionFieldLimit) throw;
            r.warnings.push_back(std::string("completion degenerate (") + err.what() +
                                 "); using direct sums up to k = " + std::to_string(D));
            if (static_cast<int>(e_f.size()) - 1 < D) {
                const Series direct{ts[s], D};
                e_f = lpoly_from_power_sums(p, power_sums(n, p, 1, std::span<const Series>(&direct, 1), options)[0]);
            }
            completion = complete_by_functional_equation(n, p, e_f, e_c);
        }
        r.pivot = completion.pivot;
        r.cross_checks = completion.cross_checks;

        const int known = static_cast<int>(e_f.size()) - 1;
        for (int j = n + 2; j <= std::min(known, D); ++j) {
            if (!(e_f[j] == completion.coeffs[j])) {
                throw ConsistencyError("direct e_" + std::to_string(j) + " differs from the completed value");
            }
            ++r.direct_compared;
        }
        if (known > D) {
            bool zero = true;
            for (int j = D + 1; j <= known; ++j) zero = zero && e_f[j].is_zero();
            r.degree_exact = zero;
            if (!zero) r.warnings.push_back("coefficients beyond degree 2n+1 are nonzero");
        }

        r.lpoly = LPolynomial{p, 1, std::move(completion.coeffs)};
        if (r.lpoly.degree() != D) r.warnings.push_back("L-polynomial degree differs from 2n+1");

        NewtonData newton = newton_polygon_of(r.lpoly);
        r.coefficient_ords = std::move(newton.coefficient_ords);
        r.polygon = std::move(newton.polygon);
        r.hodge = hodge;
        r.hodge_ok = lies_on_or_above(r.polygon, hodge) && r.polygon.width() == D &&
                     r.polygon.endpoint().y == Rational(D);

        if (prediction) {
            r.predicted = prediction->polygon;
            r.prediction_applicable = applicable;
            const bool match = r.polygon == prediction->polygon;
            if (applicable) {
                r.prediction_match = match;
            } else {
                r.informational_match = match;
                r.warnings.push_back("p is at or below the prime bound; comparison is informational");
            }
        }

        r.purity_deviation = purity_deviation(r.lpoly);
        if (!(r.purity_deviation <= kPurityTolerance)) {
            r.warnings.push_back("reciprocal roots deviate from |beta| = q by " + std::to_string(r.purity_deviation));
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

OracleReport oracle_np(int n, int p, std::int64_t t, const OracleOptions& options) {
    return oracle_np(n, p, std::span<const std::int64_t>(&t, 1), options).front();
}

}  // namespace toricnp::oracle
