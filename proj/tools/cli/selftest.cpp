#include "selftest.hpp"

#include "toricnp/cyclo.hpp"
#include "toricnp/geometry.hpp"
#include "toricnp/numtheory.hpp"
#include "toricnp/oracle.hpp"
#include "toricnp/slope_comb.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

namespace toricnp::cli {

namespace {

// Thrown inside a check body to record its first failure.
struct CheckFailed {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailed{what};
}

template <typename... Args>
std::string cat(const Args&... args) {
    std::ostringstream os;
    ((os << args), ...);
    return os.str();
}

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = std::max<std::int64_t>(lo, 2); p <= hi; ++p) {
        if (nt::is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
    }
    return out;
}

std::string weight_axioms() {
    std::mt19937_64 rng(20240601);
    std::size_t pairs = 0;
    for (int n : {2, 3, 5, 8}) {
        for (std::int64_t a = -20; a <= 20; ++a) {
            for (std::int64_t b = -20; b <= 20; ++b) {
                const Rational w = geometry::weight(n, {a, b});
                require((a == 0 && b == 0) ? w.is_zero() : w.sign() > 0, cat("weight positivity at (", a, ",", b, ")"));
            }
        }
        auto draw = [&] { return static_cast<std::int64_t>(rng() % 41) - 20; };
        for (int i = 0; i < 5000; ++i, ++pairs) {
            const geometry::LatticePoint u{draw(), draw()}, v{draw(), draw()};
            const std::int64_t c = static_cast<std::int64_t>(rng() % 11);
            require(geometry::weight(n, {c * u.a, c * u.b}) == Rational(c) * geometry::weight(n, u),
                    cat("homogeneity n=", n));
            require(geometry::weight(n, {u.a + v.a, u.b + v.b}) <= geometry::weight(n, u) + geometry::weight(n, v),
                    cat("subadditivity n=", n));
        }
    }
    return cat(pairs, " random pairs");
}

std::string hodge_closed_form() {
    for (int n = 2; n <= 12; ++n) {
        const auto h = geometry::hodge_numbers(n);
        for (int k = 0; k <= 2 * n; ++k) require(h.H[k] == 1, cat("H[", k, "] for n=", n));
        const auto poly = geometry::hodge_polygon(n);
        for (int i = 0; i <= 2 * n; ++i) require(poly.slopes()[i] == Rational(i, n), cat("slope ", i, " for n=", n));
    }
    return "n = 2..12";
}

std::string alpha_and_g() {
    std::size_t cases = 0;
    for (int n = 2; n <= 8; ++n) {
        for (std::int64_t p : primes_in(2, 200)) {
            if (n % p == 0) continue;
            ++cases;
            const auto g = slopes::g_map(n, p);
            std::vector<int> sorted = g;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i <= 2 * n; ++i) require(sorted[i] == i, cat("g not a bijection n=", n, " p=", p));
            const int w = slopes::varpi(n, p);
            for (int i = 0; i <= 2 * n; ++i) {
                require(((g[i] - static_cast<std::int64_t>(w) * i) % n + n) % n == 0, cat("g(i) != varpi i mod n"));
                if (i >= 1 && i < n) require(g[i] <= n - 1, "g leaves the lower block");
                if (i > n && i < 2 * n) require(g[i] >= n + 1 && g[i] <= 2 * n - 1, "g leaves the upper block");
                for (int j = 0; j <= 2 * n; ++j) {
                    const auto a = slopes::alpha(n, p, i, j);
                    require(a >= 0 && a <= n - 1, cat("alpha range n=", n, " p=", p));
                    require((a == 0) == ((j - g[i]) % n == 0), cat("alpha zero locus n=", n, " p=", p, " i=", i));
                }
            }
        }
    }
    return cat(cases, " (n, p) pairs");
}

std::string minimizer_characterization() {
    std::size_t cases = 0;
    for (int n = 3; n <= 7; ++n) {
        for (std::int64_t p : primes_in(n + 1, 60)) {
            for (int m = 2; m <= n - 1; ++m) {
                std::vector<int> perm(m);
                std::iota(perm.begin(), perm.end(), 0);
                std::int64_t satisfying = 0;
                do {
                    bool ok = true;
                    for (int i = 0; i < m && ok; ++i) ok = m - i - 1 <= slopes::alpha(n, p, m - 1, perm[i]);
                    satisfying += ok;
                } while (std::next_permutation(perm.begin(), perm.end()));
                const auto r = slopes::minimal_assignment(n, p, m);  // also cross-checks the solver
                require(r.minimizer_count && *r.minimizer_count == satisfying,
                        cat("minimizer count n=", n, " p=", p, " m=", m));
                ++cases;
            }
        }
    }
    return cat(cases, " (n, p, m) cases");
}

std::string prediction_symmetry() {
    std::size_t cases = 0;
    for (int n = 2; n <= 6; ++n) {
        for (std::int64_t p : primes_in(n + 1, 300)) {
            const auto s = slopes::predicted_np(n, p).polygon.slopes();
            Rational total(0);
            for (int i = 0; i <= 2 * n; ++i) {
                require(s[i] + s[2 * n - i] == Rational(2), cat("s_i + s_{2n-i} != 2 at n=", n, " p=", p));
                total += s[i];
            }
            require(total == Rational(2 * n + 1), cat("slope sum n=", n, " p=", p));
            ++cases;
        }
    }
    return cat(cases, " (n, p) pairs");
}

cyclo::CycInt random_cyc(int p, std::mt19937_64& rng) {
    std::vector<mpz_class> c(p - 1);
    for (auto& x : c) x = static_cast<long>(rng() % 15) - 7;
    cyclo::CycInt pi = cyclo::CycInt::from_integer(p, 1) - cyclo::CycInt::zeta_power(p, 1);
    cyclo::CycInt x = cyclo::CycInt::from_coeffs(p, std::move(c));
    const int e = static_cast<int>(rng() % (2 * p));
    for (int i = 0; i < e; ++i) x = x * pi;
    return x;
}

std::string valuation_axioms() {
    std::size_t cases = 0;
    for (int p : {3, 5, 7, 11}) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(p) * 7919);
        for (int trial = 0; trial < 40; ++trial) {
            const auto x = random_cyc(p, rng), y = random_cyc(p, rng);
            if (x.is_zero() || y.is_zero()) continue;
            const auto vx = *cyclo::pi_valuation(x), vy = *cyclo::pi_valuation(y);
            require(*cyclo::pi_valuation(x * y) == vx + vy, cat("multiplicativity p=", p));
            const auto s = x + y;
            if (!s.is_zero()) {
                const auto vs = *cyclo::pi_valuation(s);
                require(vs >= std::min(vx, vy), cat("ultrametric p=", p));
                if (vx != vy) require(vs == std::min(vx, vy), cat("strict ultrametric p=", p));
            }
            for (int j = 1; j < p; ++j) require(*cyclo::pi_valuation(x.galois(j)) == vx, cat("Galois p=", p));
            ++cases;
        }
    }
    return cat(cases, " random pairs");
}

std::string algorithm_equivalence(const SelftestOptions& options) {
    std::size_t cases = 0;
    oracle::EngineOptions engine;
    engine.threads = options.threads;
    for (std::int64_t p : primes_in(3, static_cast<std::int64_t>(options.equivalence_field_limit))) {
        std::uint64_t q = 1;
        for (int k = 1;; ++k) {
            q *= static_cast<std::uint64_t>(p);
            if (q > options.equivalence_field_limit) break;
            const oracle::SumContext ctx(static_cast<int>(p), k);
            std::vector<std::int64_t> c3t;
            if (p <= options.exhaustive_t_prime_limit) {
                for (std::int64_t t = 1; t < p; ++t) c3t.push_back(t);
            } else {
                c3t = {1, 2, (p - 1) / 2, p - 1};
            }
            for (int n = 2; n <= 4; ++n) {
                if (n % p == 0) continue;
                for (std::int64_t c1 : {1, -1}) {
                    const auto a = ctx.histograms(n, c1, 1, c3t, oracle::Algorithm::naive, engine);
                    const auto b = ctx.histograms(n, c1, 1, c3t, oracle::Algorithm::convolution, engine);
                    require(a == b, cat("naive != convolution at n=", n, " p=", p, " k=", k));
                    cases += c3t.size();
                }
            }
        }
    }
    return cat(cases, " sums");
}

std::string oracle_runs(const SelftestOptions& options) {
    oracle::OracleOptions opts;
    opts.engine.threads = options.threads;
    std::size_t runs = 0;
    double worst = 0.0;
    auto check = [&](int n, int p, const std::vector<std::int64_t>& ts, bool ordinary) {
        for (const auto& r : oracle::oracle_np(n, p, ts, opts)) {
            require(r.hodge_ok, cat("hodge bound fails n=", n, " p=", p, " t=", r.t));
            require(r.lpoly.degree() == 2 * n + 1, cat("degree n=", n, " p=", p));
            require(r.purity_deviation <= 1e-6, cat("purity n=", n, " p=", p, " t=", r.t));
            if (ordinary) require(r.polygon == geometry::hodge_polygon(n), cat("not ordinary n=", n, " p=", p));
            worst = std::max(worst, r.purity_deviation);
            ++runs;
        }
    };
    check(2, 3, {1, 2}, true);
    check(2, 5, {1, 2, 3, 4}, true);
    check(3, 7, {1, 2, 3}, true);
    check(3, 5, {1, 2}, false);
    check(4, 5, {1, 2}, true);
    return cat(runs, " oracle runs, max purity deviation ", worst);
}

}  // namespace

std::vector<SelftestCheck> run_selftest(const SelftestOptions& options,
                                        const std::function<void(const SelftestCheck&)>& on_check) {
    const std::vector<std::pair<std::string, std::function<std::string()>>> checks{
        {"weight-axioms", weight_axioms},
        {"hodge-closed-form", hodge_closed_form},
        {"alpha-range-zero-locus-g-bijection", alpha_and_g},
        {"minimizer-characterization", minimizer_characterization},
        {"predicted-slope-symmetry", prediction_symmetry},
        {"pi-valuation-axioms", valuation_axioms},
        {"naive-vs-convolution", [&] { return algorithm_equivalence(options); }},
        {"oracle-hodge-purity", [&] { return oracle_runs(options); }},
    };
    std::vector<SelftestCheck> out;
    for (const auto& [name, body] : checks) {
        SelftestCheck c;
        c.name = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.detail = body();
            c.passed = true;
        } catch (const CheckFailed& f) {
            c.detail = f.what;
        } catch (const std::exception& e) {
            c.detail = std::string("exception: ") + e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_check) on_check(c);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace toricnp::cli
