#include "toricnp/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricnp {

PolygonData PolygonData::from_slopes(std::vector<Rational> slopes, Rational start_y) {
    PolygonData poly;
    poly.vertices_.push_back({0, start_y});
    Rational y = start_y;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        y += slopes[i];
        const bool last = i + 1 == slopes.size();
        if (last || slopes[i + 1] != slopes[i]) {
            poly.vertices_.push_back({static_cast<std::int64_t>(i + 1), y});
        }
    }
    poly.slopes_ = std::move(slopes);
    return poly;
}

namespace {

// Sign of the cross product (b - a) x (c - a); > 0 means a left turn.
int turn(const std::pair<std::int64_t, Rational>& a, const std::pair<std::int64_t, Rational>& b,
         const std::pair<std::int64_t, Rational>& c) {
    Rational lhs = Rational(b.first - a.first) * (c.second - a.second);
    Rational rhs = (b.second - a.second) * Rational(c.first - a.first);
    return (lhs - rhs).sign();
}

}  // namespace

PolygonData PolygonData::lower_hull(std::vector<std::pair<std::int64_t, Rational>> points) {
    if (points.empty()) return from_slopes({});
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].first == points[i - 1].first) {
            throw std::invalid_argument("lower_hull: duplicate abscissa");
        }
    }
    if (points.front().first != 0) throw std::invalid_argument("lower_hull: leftmost point must be at x = 0");

    // Andrew's monotone chain, lower half; collinear points are dropped.
    std::vector<std::pair<std::int64_t, Rational>> hull;
    for (auto& pt : points) {
        while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
        hull.push_back(std::move(pt));
    }

    std::vector<Rational> slopes;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        const std::int64_t dx = hull[i].first - hull[i - 1].first;
        Rational s = (hull[i].second - hull[i - 1].second) / Rational(dx);
        for (std::int64_t k = 0; k < dx; ++k) slopes.push_back(s);
    }
    return from_slopes(std::move(slopes), hull.front().second);
}

Rational PolygonData::y_at(std::int64_t x) const {
    if (x < 0 || x > width()) throw std::out_of_range("PolygonData::y_at: abscissa outside polygon");
    Rational y = start_y();
    for (std::int64_t i = 0; i < x; ++i) y += slopes_[static_cast<std::size_t>(i)];
    return y;
}

bool PolygonData::is_convex() const {
    return std::is_sorted(slopes_.begin(), slopes_.end());
}

bool lies_on_or_above(const PolygonData& upper, const PolygonData& lower) {
    if (upper.width() != lower.width()) return false;
    Rational yu = upper.y_at(0);
    Rational yl = lower.y_at(0);
    if (yu < yl) return false;
    for (std::size_t i = 0; i < upper.slopes().size(); ++i) {
        yu += upper.slopes()[i];
        yl += lower.slopes()[i];
        if (yu < yl) return false;
    }
    return yu == yl;
}

}  // namespace toricnp
