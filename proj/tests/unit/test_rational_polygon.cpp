#include "toricnp/polygon.hpp"
#include "toricnp/rational.hpp"

#include "reference.hpp"

#include <gtest/gtest.h>

#include <random>

using toricnp::PolygonData;
using toricnp::Rational;

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_EQ(Rational(6, -4).den(), 2);
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_EQ(Rational(10, 4).str(), "5/2");
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ArithmeticAndOrder) {
    const Rational a(1, 3), b(7, 69);
    EXPECT_EQ(a + b, Rational(10, 23));
    EXPECT_EQ(a - b, Rational(16, 69));
    EXPECT_EQ(a * b, Rational(7, 207));
    EXPECT_EQ(a / b, Rational(23, 7));
    EXPECT_LT(b, a);
    EXPECT_EQ(toricnp::abs(Rational(-2, 3)), Rational(2, 3));
}

TEST(Polygon, FromSlopesDropsCollinearVertices) {
    const auto poly = PolygonData::from_slopes({Rational(0), Rational(1, 2), Rational(1, 2), Rational(1)});
    ASSERT_EQ(poly.vertices().size(), 4u);
    EXPECT_EQ(poly.vertices()[2].x, 3);
    EXPECT_EQ(poly.vertices()[2].y, Rational(1));
    EXPECT_EQ(poly.width(), 4);
    EXPECT_EQ(poly.endpoint().y, Rational(2));
    EXPECT_TRUE(poly.is_convex());
}

TEST(Polygon, UnsortedSlopesAreKeptInOrder) {
    const auto poly = PolygonData::from_slopes({Rational(1), Rational(0)});
    EXPECT_FALSE(poly.is_convex());
    EXPECT_EQ(poly.slopes()[0], Rational(1));
}

TEST(Polygon, LowerHullOfUnitAndP) {
    // Coefficients (1, u, u p): points (0,0), (1,0), (2,1).
    const auto poly = PolygonData::lower_hull({{0, Rational(0)}, {1, Rational(0)}, {2, Rational(1)}});
    EXPECT_EQ(poly.slopes(), (std::vector<Rational>{Rational(0), Rational(1)}));
}

TEST(Polygon, LowerHullRejectsBadInput) {
    EXPECT_THROW(PolygonData::lower_hull({{1, Rational(0)}, {2, Rational(1)}}), std::invalid_argument);
    EXPECT_THROW(PolygonData::lower_hull({{0, Rational(0)}, {0, Rational(1)}}), std::invalid_argument);
}

TEST(Polygon, LiesOnOrAbove) {
    const auto low = PolygonData::from_slopes({Rational(0), Rational(1), Rational(2)});
    const auto high = PolygonData::from_slopes({Rational(1, 2), Rational(1), Rational(3, 2)});
    EXPECT_TRUE(toricnp::lies_on_or_above(high, low));
    EXPECT_FALSE(toricnp::lies_on_or_above(low, high));
    const auto shorter = PolygonData::from_slopes({Rational(0), Rational(1)});
    EXPECT_FALSE(toricnp::lies_on_or_above(shorter, low));
}

// The monotone-chain hull agrees with a brute-force chord minimum.
TEST(PolygonProperty, HullMatchesBruteForce) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int width = 1 + static_cast<int>(rng() % 9);
        std::vector<std::pair<std::int64_t, Rational>> pts{{0, Rational(0)}};
        std::vector<std::pair<int, mpq_class>> ref_pts{{0, mpq_class(0)}};
        for (int x = 1; x <= width; ++x) {
            if (x != width && rng() % 3 == 0) continue;  // sparse points, endpoint kept
            const long num = static_cast<long>(rng() % 41) - 10, den = 1 + static_cast<long>(rng() % 6);
            pts.emplace_back(x, Rational(num, den));
            ref_pts.emplace_back(x, mpq_class(num, den));
            ref_pts.back().second.canonicalize();
        }
        const auto poly = PolygonData::lower_hull(pts);
        const auto h = ref::hull_heights(ref_pts, width);
        ASSERT_EQ(poly.width(), width);
        EXPECT_TRUE(poly.is_convex());
        for (int x = 0; x <= width; ++x) EXPECT_EQ(poly.y_at(x).mpq(), h[x]) << "trial " << trial << " x " << x;
    }
}
