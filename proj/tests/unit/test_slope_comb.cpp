#include "toricnp/geometry.hpp"
#include "toricnp/numtheory.hpp"
#include "toricnp/slope_comb.hpp"

#include "reference.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace toricnp;

namespace {

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = lo; p <= hi; ++p) {
        if (nt::is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
    }
    return out;
}

// Independent alpha: (i - p j) mod n.
std::int64_t alpha_ref(int n, std::int64_t p, std::int64_t i, std::int64_t j) {
    return (((i - p * j) % n) + n) % n;
}

struct BruteAssignment {
    std::int64_t N;
    std::int64_t count;
};

BruteAssignment brute_assignment(int n, std::int64_t p, int m) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t best = -1, count = 0;
    do {
        std::int64_t s = 0;
        for (int i = 0; i < m; ++i) s += alpha_ref(n, p, i, perm[i]);
        if (best < 0 || s < best) {
            best = s;
            count = 1;
        } else if (s == best) {
            ++count;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, count};
}

std::vector<Rational> ordinary_slopes(int n) {
    std::vector<Rational> s;
    for (int i = 0; i <= 2 * n; ++i) s.emplace_back(i, n);
    return s;
}

}  // namespace

TEST(Alpha, Examples) {
    EXPECT_EQ(slopes::alpha(3, 5, 0, 0), 0);
    EXPECT_EQ(slopes::alpha(3, 5, 1, 1), 2);
    EXPECT_EQ(slopes::alpha(3, 5, 0, 1), 1);
    EXPECT_EQ(slopes::alpha(3, 5, 1, 0), 1);
}

TEST(GMap, Examples) {
    EXPECT_EQ(slopes::g_map(3, 7), (std::vector<int>{0, 1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(slopes::g_map(3, 5), (std::vector<int>{0, 2, 1, 3, 5, 4, 6}));
    EXPECT_EQ(slopes::varpi(3, 5), 2);
    EXPECT_EQ(slopes::varpi(3, 7), 1);
    EXPECT_THROW(slopes::g_map(3, 3), std::invalid_argument);
}

TEST(SlopeProperty, AlphaRangeZeroLocusAndG) {
    for (int n = 2; n <= 8; ++n) {
        for (std::int64_t p : primes_between(2, 400)) {
            if (n % p == 0) continue;
            const auto g = slopes::g_map(n, p);
            const int w = slopes::varpi(n, p);
            ASSERT_EQ(p * w % n, 1 % n);
            std::vector<int> sorted = g;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i <= 2 * n; ++i) ASSERT_EQ(sorted[i], i) << "g not a bijection, n=" << n << " p=" << p;
            for (int i = 0; i <= 2 * n; ++i) {
                EXPECT_EQ(((g[i] - static_cast<std::int64_t>(w) * i) % n + n) % n, 0);
                if (i >= 1 && i <= n - 1) {
                    EXPECT_LE(g[i], n - 1);
                    EXPECT_GE(g[i], 1);
                }
                if (i >= n + 1 && i <= 2 * n - 1) {
                    EXPECT_GE(g[i], n + 1);
                    EXPECT_LE(g[i], 2 * n - 1);
                }
                for (int j = 0; j <= 2 * n; ++j) {
                    const std::int64_t a = slopes::alpha(n, p, i, j);
                    ASSERT_EQ(a, alpha_ref(n, p, i, j));
                    ASSERT_GE(a, 0);
                    ASSERT_LE(a, n - 1);
                    EXPECT_EQ(a == 0, (j - g[i]) % n == 0) << n << " " << p << " " << i << " " << j;
                }
            }
            EXPECT_EQ(g[0], 0);
            EXPECT_EQ(g[n], n);
            EXPECT_EQ(g[2 * n], 2 * n);
        }
    }
}

TEST(Assignment, Examples) {
    const auto m1 = slopes::minimal_assignment(3, 5, 1);
    EXPECT_EQ(m1.N, 0);
    EXPECT_EQ(m1.minimizer_count, 1);
    const auto m2 = slopes::minimal_assignment(3, 5, 2);
    EXPECT_EQ(m2.N, 2);
    EXPECT_EQ(m2.minimizer_count, 2);
    const auto m3 = slopes::minimal_assignment(3, 5, 3);
    EXPECT_EQ(m3.N, 0);
    const auto g = slopes::g_map(3, 5);
    std::int64_t along_g = 0;
    for (int i = 0; i < 3; ++i) along_g += slopes::alpha(3, 5, i, g[i]);
    EXPECT_EQ(along_g, 0);
    EXPECT_THROW(slopes::minimal_assignment(3, 5, 0), std::invalid_argument);
    EXPECT_THROW(slopes::minimal_assignment(3, 5, 5), std::invalid_argument);
}

TEST(Assignment, HungarianMatchesBruteForce) {
    for (int n = 2; n <= 8; ++n) {
        for (std::int64_t p : primes_between(n + 1, 120)) {
            for (int m = 1; m <= n + 1; ++m) {
                const auto r = slopes::minimal_assignment(n, p, m);
                const auto b = brute_assignment(n, p, m);
                ASSERT_EQ(r.N, b.N) << n << " " << p << " " << m;
                ASSERT_TRUE(r.minimizer_count.has_value());
                EXPECT_EQ(*r.minimizer_count, b.count);
                std::int64_t witness = 0;
                for (int i = 0; i < m; ++i) witness += slopes::alpha(n, p, i, r.witness[i]);
                EXPECT_EQ(witness, r.N);
            }
        }
    }
}

TEST(Assignment, RandomCostMatrices) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 7);
        std::vector<std::vector<std::int64_t>> cost(m, std::vector<std::int64_t>(m));
        for (auto& row : cost) {
            for (auto& c : row) c = static_cast<std::int64_t>(rng() % 50) - 10;
        }
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        std::int64_t best = INT64_MAX;
        do {
            std::int64_t s = 0;
            for (int i = 0; i < m; ++i) s += cost[i][perm[i]];
            best = std::min(best, s);
        } while (std::next_permutation(perm.begin(), perm.end()));
        EXPECT_EQ(slopes::hungarian(cost).first, best);
    }
}

// A permutation minimizes iff m - i - 1 <= alpha_{m-1, delta(i)} for all i.
TEST(SlopeProperty, MinimizerCharacterization) {
    for (int n = 3; n <= 8; ++n) {
        for (std::int64_t p : primes_between(n + 1, 90)) {
            for (int m = 2; m <= n - 1; ++m) {
                std::vector<int> perm(m);
                std::iota(perm.begin(), perm.end(), 0);
                std::int64_t satisfying = 0;
                do {
                    bool ok = true;
                    for (int i = 0; i < m && ok; ++i) ok = m - i - 1 <= alpha_ref(n, p, m - 1, perm[i]);
                    satisfying += ok;
                } while (std::next_permutation(perm.begin(), perm.end()));
                EXPECT_EQ(satisfying, *slopes::minimal_assignment(n, p, m).minimizer_count)
                    << "n=" << n << " p=" << p << " m=" << m;
            }
        }
    }
}

TEST(BSequence, Fixtures) {
    EXPECT_EQ(slopes::b_sequence(3, 47), (std::vector<std::int64_t>{0, 2, -2, 0}));
    EXPECT_EQ(slopes::b_sequence(4, 127), (std::vector<std::int64_t>{0, 2, 0, -2, 0}));
    for (std::int64_t p : {7, 13, 31}) EXPECT_EQ(slopes::b_sequence(3, p), (std::vector<std::int64_t>(4, 0)));
    EXPECT_THROW(slopes::b_sequence(3, 2), std::invalid_argument);
}

TEST(SlopeProperty, TopAssignmentsVanish) {
    for (int n = 2; n <= 9; ++n) {
        for (std::int64_t p : primes_between(n + 1, 200)) {
            EXPECT_EQ(slopes::minimal_assignment(n, p, n).N, 0);
            EXPECT_EQ(slopes::minimal_assignment(n, p, n + 1).N, 0);
            EXPECT_EQ(slopes::b_sequence(n, p).back(), 0);
        }
    }
}

// B depends on p only through p mod n, checked over a range of primes.
TEST(SlopeProperty, BDependsOnlyOnResidue) {
    for (int n = 2; n <= 9; ++n) {
        std::map<std::int64_t, std::vector<std::int64_t>> by_residue;
        for (std::int64_t p : primes_between(n + 1, 1500)) {
            const auto B = slopes::b_sequence(n, p);
            auto [it, fresh] = by_residue.emplace(p % n, B);
            if (!fresh) EXPECT_EQ(it->second, B) << "n=" << n << " p=" << p;
        }
    }
}

TEST(Vandermonde, Determinants) {
    EXPECT_EQ(slopes::determinant({{1, 0}, {1, 4}}), 4);
    EXPECT_EQ(slopes::vandermonde_like({0, 2}), (std::vector<std::vector<mpz_class>>{{1, 0}, {1, 4}}));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(m));
        for (auto& row : a) {
            for (auto& x : row) x = static_cast<long>(rng() % 21) - 10;
        }
        EXPECT_EQ(slopes::determinant(a), ref::bareiss_det(a));
    }
}

TEST(Vandermonde, Report) {
    const auto r3 = slopes::vandermonde_report(3);
    ASSERT_EQ(r3.per_m.size(), 3u);
    EXPECT_EQ(r3.per_m[0].max_abs_det, 1);
    EXPECT_EQ(r3.per_m[1].max_abs_det, 1);
    EXPECT_EQ(r3.per_m[2].max_abs_det, 4);  // pairs of {0,1,2}: 1, 4, 3
    for (int n = 2; n <= 12; ++n) {
        const auto r = slopes::vandermonde_report(n);
        EXPECT_TRUE(r.overall) << n;
        EXPECT_EQ(r.per_m[0].max_abs_det, 1);
        EXPECT_EQ(r.per_m[1].max_abs_det, 1);
        for (const auto& level : r.per_m) EXPECT_GE(level.max_abs_det, 1);
    }
}

TEST(Assumption16, Examples) {
    const auto a = slopes::assumption16(3, 7);
    EXPECT_TRUE(a.ok);
    EXPECT_EQ(a.ord, (std::vector<int>{1, 1}));
    EXPECT_EQ(slopes::ord_p(721, 7), 1);
    EXPECT_EQ(slopes::ord_p(119, 7), 1);
    const auto w5 = slopes::assumption16(2, 5);
    EXPECT_FALSE(w5.ok);
    EXPECT_EQ(w5.ord, (std::vector<int>{2}));
    const auto w13 = slopes::assumption16(2, 13);
    EXPECT_FALSE(w13.ok);
    EXPECT_EQ(w13.ord, (std::vector<int>{2}));
    EXPECT_EQ(mpz_class("479001601") % (13 * 13), 0);
}

TEST(Assumption16, AgreesWithDirectFactorials) {
    for (int n = 2; n <= 6; ++n) {
        for (std::int64_t p : primes_between(n + 1, 300)) {
            const auto r = slopes::assumption16(n, p);
            for (int k = 1; k <= n - 1; ++k) {
                mpz_class f1 = 1, f2 = 1;
                for (int i = 2; i <= k - 1; ++i) f1 *= i;
                for (std::int64_t i = 2; i <= p - k; ++i) f2 *= static_cast<long>(i);
                mpz_class v = f1 * f2 - (k % 2 == 0 ? 1 : -1);
                int ord = 0;
                while (v % p == 0) {
                    v /= static_cast<long>(p);
                    ++ord;
                }
                EXPECT_EQ(r.ord[k - 1], ord);
            }
        }
    }
}

TEST(PrimeBounds, Fixtures) {
    const auto b3 = slopes::prime_bounds(3);
    EXPECT_EQ(b3.thm15, 43);
    EXPECT_EQ(b3.thm17, 463);
    const auto b4 = slopes::prime_bounds(4);
    EXPECT_EQ(b4.thm15, 109);
    EXPECT_EQ(b4.thm17, 1333);
}

TEST(Prediction, Fixtures) {
    const Rational d3(7, 69);
    const auto p47 = slopes::predicted_np(3, 47);
    EXPECT_EQ(p47.polygon.slopes(),
              (std::vector<Rational>{Rational(0), Rational(1, 3) + d3, Rational(2, 3) - d3, Rational(1),
                                     Rational(4, 3) + d3, Rational(5, 3) - d3, Rational(2)}));
    EXPECT_EQ(Rational(14, 3 * 46), d3);
    EXPECT_FALSE(p47.ordinary);
    EXPECT_TRUE(p47.warnings.empty());

    const Rational d4(18, 4 * 126);
    const auto p127 = slopes::predicted_np(4, 127);
    EXPECT_EQ(p127.polygon.slopes(),
              (std::vector<Rational>{Rational(0), Rational(1, 4) + d4, Rational(1, 2), Rational(3, 4) - d4,
                                     Rational(1), Rational(5, 4) + d4, Rational(3, 2), Rational(7, 4) - d4,
                                     Rational(2)}));

    for (std::int64_t p : {7, 13, 31}) {
        const auto r = slopes::predicted_np(3, p);
        EXPECT_EQ(r.polygon.slopes(), ordinary_slopes(3));
        EXPECT_TRUE(r.ordinary);
    }
    for (std::int64_t p : {5, 13, 29}) EXPECT_EQ(slopes::predicted_np(4, p).polygon.slopes(), ordinary_slopes(4));
    EXPECT_FALSE(slopes::predicted_np(3, 7).warnings.empty());  // below the bound 43
    EXPECT_THROW(slopes::predicted_np(3, 3), std::invalid_argument);
}

TEST(SlopeProperty, PredictionSymmetryAndOrdinariness) {
    for (int n = 2; n <= 6; ++n) {
        const auto bound = slopes::prime_bounds(n).thm15;
        for (std::int64_t p : primes_between(n + 1, 400)) {
            const auto r = slopes::predicted_np(n, p);
            const auto& s = r.polygon.slopes();
            ASSERT_EQ(static_cast<int>(s.size()), 2 * n + 1);
            Rational total(0);
            for (int i = 0; i <= 2 * n; ++i) {
                EXPECT_EQ(s[i] + s[2 * n - i], Rational(2));
                total += s[i];
            }
            EXPECT_EQ(total, Rational(2 * n + 1));
            EXPECT_EQ(r.ordinary, p % n == 1);
            if (mpz_class(p) > bound) {
                EXPECT_TRUE(r.polygon.is_convex());
                EXPECT_EQ(s == ordinary_slopes(n), p % n == 1) << n << " " << p;
                EXPECT_TRUE(lies_on_or_above(r.polygon, geometry::hodge_polygon(n)));
            }
        }
    }
}
