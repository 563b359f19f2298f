#include "toricnp/toric_sum.hpp"

#include "reference.hpp"

#include <gtest/gtest.h>

using namespace toricnp;
using oracle::Algorithm;
using oracle::SumSpec;

TEST(ToricSum, HandEnumeratedExample) {
    // (x,y) over F_3^*: traces 0, 2, 1, 1, so 1 + zeta^2 + 2 zeta = zeta.
    const SumSpec spec{2, 3, 1, 1, 1, 1, 1};
    const auto hist = oracle::toric_histogram(spec, Algorithm::naive);
    EXPECT_EQ(hist, (std::vector<std::uint64_t>{1, 2, 1}));
    const auto s = oracle::toric_sum(spec, Algorithm::naive);
    EXPECT_EQ(s.coeffs(), (std::vector<mpz_class>{0, 1}));
    EXPECT_EQ(oracle::toric_sum(spec, Algorithm::convolution), s);
}

TEST(ToricSum, MatchesIndependentEnumeration) {
    struct Case {
        int n, p, k;
        std::int64_t c1, c2, c3t;
    };
    const std::vector<Case> cases{{2, 3, 1, 1, 1, 1}, {2, 3, 2, 1, 1, 2}, {2, 3, 3, 2, 1, 1}, {2, 5, 2, 4, 1, 3},
                                  {3, 5, 1, 1, 1, 4}, {3, 5, 2, 1, 1, 1}, {3, 7, 2, 1, 1, 6}, {4, 3, 3, 1, 1, 2},
                                  {4, 5, 2, 1, 1, 2}, {5, 3, 4, 1, 2, 1}, {2, 11, 2, 10, 1, 7}};
    for (const auto& c : cases) {
        const SumSpec spec{c.n, c.p, c.k, c.c1, c.c2, c.c3t, 1};
        const auto expected = ref::toric_histogram(c.n, c.p, c.k, c.c1, c.c2, c.c3t);
        EXPECT_EQ(oracle::toric_histogram(spec, Algorithm::naive), expected) << c.n << " " << c.p << " " << c.k;
        EXPECT_EQ(oracle::toric_histogram(spec, Algorithm::convolution), expected) << c.n << " " << c.p << " " << c.k;
    }
}

TEST(ToricSum, NaiveEqualsConvolutionMidSize) {
    const SumSpec spec{3, 5, 2, 1, 1, 1, 1};
    EXPECT_EQ(oracle::toric_sum(spec, Algorithm::naive), oracle::toric_sum(spec, Algorithm::convolution));
    const SumSpec big{3, 5, 4, 1, 1, 4, 3};
    EXPECT_EQ(oracle::toric_sum(big, Algorithm::naive), oracle::toric_sum(big, Algorithm::convolution));
}

TEST(ToricSum, BatchedHistogramsMatchSingleCalls) {
    const oracle::SumContext ctx(7, 2);
    const std::vector<std::int64_t> c3t{1, 3, -3, 6};
    for (auto alg : {Algorithm::naive, Algorithm::convolution}) {
        const auto batch = ctx.histograms(3, 1, 1, c3t, alg);
        for (std::size_t s = 0; s < c3t.size(); ++s) {
            EXPECT_EQ(batch[s], oracle::toric_histogram(SumSpec{3, 7, 2, 1, 1, c3t[s], 1}, Algorithm::naive));
        }
    }
}

// sigma_j(S(c1, c2, c3)) = S(j c1, j c2, j c3).
TEST(ToricSum, TraceTwistCovariance) {
    for (int p : {5, 7}) {
        for (int j = 2; j < p; ++j) {
            const SumSpec base{2, p, 2, 1, 1, 1, 3};
            const SumSpec twisted{2, p, 2, j, j, j, 3};
            EXPECT_EQ(oracle::toric_sum(base, Algorithm::naive).galois(j),
                      oracle::toric_sum(twisted, Algorithm::convolution));
        }
    }
}

TEST(ToricSum, ThreadCountDoesNotChangeResults) {
    const SumSpec spec{3, 7, 3, 1, 1, 1, 2};
    const auto one = oracle::toric_histogram(spec, Algorithm::convolution, {1, 0});
    const auto four = oracle::toric_histogram(spec, Algorithm::convolution, {4, 0});
    EXPECT_EQ(one, four);
    std::uint64_t total = 0;
    for (auto m : one) total += m;
    EXPECT_EQ(total, 342u * 342u);
}

TEST(ToricSum, DomainChecks) {
    EXPECT_THROW(oracle::validate(SumSpec{3, 3, 1, 1, 1, 1, 1}, Algorithm::naive), std::invalid_argument);
    EXPECT_THROW(oracle::validate(SumSpec{2, 4, 1, 1, 1, 1, 1}, Algorithm::naive), std::invalid_argument);
    EXPECT_THROW(oracle::validate(SumSpec{2, 5, 1, 1, 1, 1, 5}, Algorithm::naive), std::invalid_argument);
    EXPECT_THROW(oracle::validate(SumSpec{2, 5, 7, 1, 1, 1, 1}, Algorithm::naive), std::invalid_argument);
    EXPECT_NO_THROW(oracle::validate(SumSpec{2, 5, 7, 1, 1, 1, 1}, Algorithm::convolution));
    EXPECT_THROW(oracle::validate(SumSpec{2, 5, 12, 1, 1, 1, 1}, Algorithm::convolution), std::invalid_argument);
    EXPECT_THROW(oracle::toric_histogram(SumSpec{2, 5, 6, 1, 1, 1, 1}, Algorithm::convolution, {1, 1e-6}),
                 std::runtime_error);
}
