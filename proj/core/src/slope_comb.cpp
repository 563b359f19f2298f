#include "toricnp/slope_comb.hpp"

#include "toricnp/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace toricnp::slopes {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a > 0) == (b > 0))) ++q;
    return q;
}

void require_coprime(int n, std::int64_t p) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (p < 2 || !nt::is_prime(static_cast<nt::u64>(p))) {
        throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    }
    if (std::gcd<std::int64_t, std::int64_t>(n, p) != 1) {
        throw std::invalid_argument("p divides n: the family is degenerate");
    }
}

}  // namespace

void validate(const FamilyParams& params) {
    require_coprime(params.n, params.p);
    if (params.a < 1) throw std::invalid_argument("extension exponent a must be >= 1");
    if (params.t_residue < 1 || params.t_residue >= params.p) {
        throw std::invalid_argument("t must be a nonzero residue in 1..p-1");
    }
}

std::int64_t alpha(int n, std::int64_t p, std::int64_t i, std::int64_t j) {
    return i - p * j + n * ceil_div(p * j - i, n);
}

int varpi(int n, std::int64_t p) {
    require_coprime(n, p);
    auto inv = nt::inv_mod(static_cast<nt::u64>(p % n), static_cast<nt::u64>(n));
    // gcd(p, n) = 1 and n >= 2, so the inverse exists and is nonzero.
    return static_cast<int>(*inv);
}

std::vector<int> g_map(int n, std::int64_t p) {
    const int w = varpi(n, p);
    std::vector<int> g(2 * n + 1);
    for (int i = 0; i <= 2 * n; ++i) {
        if (i == 0 || i == n || i == 2 * n) {
            g[i] = i;
        } else if (i < n) {
            g[i] = static_cast<int>(w * i + n * ceil_div(-static_cast<std::int64_t>(w) * i, n));
        } else {
            g[i] = static_cast<int>(n + w * i + n * ceil_div(-static_cast<std::int64_t>(w) * i, n));
        }
    }
    return g;
}

std::pair<std::int64_t, std::vector<int>> hungarian(const std::vector<std::vector<std::int64_t>>& cost) {
    const int m = static_cast<int>(cost.size());
    if (m == 0) return {0, {}};
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    // Potentials u (rows), v (columns); match[j] = row matched to column j (1-based, 0 = free).
    std::vector<std::int64_t> u(m + 1, 0), v(m + 1, 0);
    std::vector<int> match(m + 1, 0), way(m + 1, 0);
    for (int i = 1; i <= m; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(m + 1, kInf);
        std::vector<bool> used(m + 1, false);
        do {
            used[j0] = true;
            const int i0 = match[j0];
            std::int64_t delta = kInf;
            int j1 = 0;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> assignment(m);
    std::int64_t total = 0;
    for (int j = 1; j <= m; ++j) {
        assignment[match[j] - 1] = j - 1;
        total += cost[match[j] - 1][j - 1];
    }
    return {total, assignment};
}

namespace {

std::vector<std::vector<std::int64_t>> alpha_matrix(int n, std::int64_t p, int m) {
    std::vector<std::vector<std::int64_t>> cost(m, std::vector<std::int64_t>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) cost[i][j] = alpha(n, p, i, j);
    }
    return cost;
}

void require_assignment_size(int n, int m) {
    if (m < 1 || m > n + 1) {
        throw std::invalid_argument("assignment size m must lie in 1..n+1, got " + std::to_string(m));
    }
}

constexpr int kExhaustiveLimit = 9;

}  // namespace

AssignmentResult minimal_assignment_exhaustive(int n, std::int64_t p, int m) {
    require_coprime(n, p);
    require_assignment_size(n, m);
    if (m > kExhaustiveLimit + 2) throw std::invalid_argument("exhaustive search limited to m <= 11");
    const auto cost = alpha_matrix(n, p, m);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    AssignmentResult best{m, std::numeric_limits<std::int64_t>::max(), 0, perm};
    do {
        std::int64_t s = 0;
        for (int i = 0; i < m; ++i) s += cost[i][perm[i]];
        if (s < best.N) {
            best.N = s;
            best.minimizer_count = 1;
            best.witness = perm;
        } else if (s == best.N) {
            ++*best.minimizer_count;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

AssignmentResult minimal_assignment(int n, std::int64_t p, int m) {
    require_coprime(n, p);
    require_assignment_size(n, m);
    auto [total, assignment] = hungarian(alpha_matrix(n, p, m));
    AssignmentResult result{m, total, std::nullopt, std::move(assignment)};
    if (m <= kExhaustiveLimit) {
        AssignmentResult brute = minimal_assignment_exhaustive(n, p, m);
        if (brute.N != result.N) {
            throw std::logic_error("Hungarian solver and exhaustive search disagree on N_" + std::to_string(m));
        }
        result.minimizer_count = brute.minimizer_count;
    }
    return result;
}

std::vector<std::int64_t> b_sequence(int n, std::int64_t p) {
    require_coprime(n, p);
    if (p <= n) throw std::invalid_argument("B_m requires p > n");
    std::vector<std::int64_t> N(n + 2, 0);
    for (int m = 1; m <= n + 1; ++m) N[m] = minimal_assignment(n, p, m).N;
    std::vector<std::int64_t> B(n + 1);
    for (int m = 0; m <= n; ++m) B[m] = N[m + 1] - N[m];
    return B;
}

std::vector<std::vector<mpz_class>> vandermonde_like(const std::vector<int>& xs) {
    const std::size_t m = xs.size();
    std::vector<std::vector<mpz_class>> v(m, std::vector<mpz_class>(m));
    for (std::size_t r = 0; r < m; ++r) {
        mpz_class entry = 1;
        for (std::size_t c = 0; c < m; ++c) {
            v[r][c] = entry;
            const mpz_class f = xs[r] - static_cast<long>(c);
            entry *= f * f;
        }
    }
    return v;
}

mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
    const std::size_t m = a.size();
    if (m == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < m && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == m) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[m - 1][m - 1];
}

Assumption14Report vandermonde_report(int n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (n > 24) throw std::invalid_argument("determinant scan limited to n <= 24");
    static std::mutex cache_mutex;
    static std::map<int, Assumption14Report> cache;
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }

    Assumption14Report report;
    report.n = n;
    report.per_m.resize(n);
    for (int m = 0; m < n; ++m) report.per_m[m] = {m, true, m <= 1 ? mpz_class(1) : mpz_class(0)};
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int m = std::popcount(mask);
        if (m < 2 || m >= n) continue;
        std::vector<int> xs;
        for (int x = 0; x < n; ++x) {
            if (mask & (1u << x)) xs.push_back(x);
        }
        mpz_class det = abs(determinant(vandermonde_like(xs)));
        auto& level = report.per_m[m];
        if (det == 0) level.all_nonzero = false;
        if (det > level.max_abs_det) level.max_abs_det = det;
    }
    report.overall = std::all_of(report.per_m.begin(), report.per_m.end(),
                                 [](const VandermondeLevel& l) { return l.all_nonzero; });

    std::lock_guard lock(cache_mutex);
    cache.emplace(n, report);
    return report;
}

int ord_p(const mpz_class& value, std::int64_t p) {
    if (value == 0) throw std::domain_error("ord_p of zero is infinite");
    mpz_class rest;
    const mpz_class prime = static_cast<long>(p);
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t()));
}

Assumption16Result assumption16(int n, std::int64_t p) {
    require_coprime(n, p);
    if (p <= n) throw std::invalid_argument("assumption on factorials requires p > n");
    Assumption16Result result;
    for (int k = 1; k <= n - 1; ++k) {
        mpz_class a, b;
        mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(k - 1));
        mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(p - k));
        mpz_class value = a * b - (k % 2 == 0 ? 1 : -1);
        const int v = ord_p(value, p);
        result.ord.push_back(v);
        if (v != 1) result.ok = false;
    }
    return result;
}

PrimeBounds prime_bounds(int n) {
    const Assumption14Report report = vandermonde_report(n);
    if (!report.overall) {
        throw std::runtime_error("determinant hypothesis fails for n = " + std::to_string(n));
    }
    const std::int64_t nn = n;
    PrimeBounds bounds;
    bounds.thm15 = static_cast<long>(2 * nn * nn * nn - nn * nn - nn + 1);
    for (const auto& level : report.per_m) bounds.thm15 = std::max(bounds.thm15, level.max_abs_det);
    bounds.thm17 = 4 * nn * nn * nn * nn + 4 * nn * nn * nn + 3 * nn * nn + nn + 1;
    return bounds;
}

std::vector<Rational> hodge_slopes(int n) {
    std::vector<Rational> s;
    for (int i = 0; i <= 2 * n; ++i) s.emplace_back(i, n);
    return s;
}

PredictionReport predicted_np(int n, std::int64_t p) {
    require_coprime(n, p);
    if (p <= n) throw std::invalid_argument("prediction requires p > n");

    PredictionReport report;
    report.params = {n, p, 1, 1};
    report.B = b_sequence(n, p);

    const Rational scale(mpz_class(2 * n + 1), mpz_class(static_cast<long>(n * (p - 1))));
    std::vector<Rational> slopes;
    for (int i = 0; i <= 2 * n; ++i) {
        Rational s(i, n);
        if (i <= n) {
            s += scale * Rational(static_cast<long>(report.B[i]));
        } else {
            s -= scale * Rational(static_cast<long>(report.B[2 * n - i]));
        }
        slopes.push_back(std::move(s));
    }
    report.polygon = PolygonData::from_slopes(std::move(slopes));
    report.ordinary = (p % n == 1);

    const PrimeBounds bounds = prime_bounds(n);
    report.p_bound_thm15 = bounds.thm15;
    report.p_bound_thm17 = bounds.thm17;
    if (mpz_class(static_cast<long>(p)) <= bounds.thm15) {
        report.warnings.push_back("p = " + std::to_string(p) + " is at or below the prime bound " +
                                  bounds.thm15.get_str() + "; slopes are not guaranteed");
    }
    if (!report.polygon.is_convex()) {
        report.warnings.push_back("predicted slope list is not nondecreasing");
    }
    return report;
}

}  // namespace toricnp::slopes
