#pragma once

#include "toricnp/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace toricnp {

struct Vertex {
    std::int64_t x = 0;
    Rational y;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A Newton or Hodge polygon, stored both as its vertex chain and as the
/// slope list expanded to one entry per unit of horizontal length.
///
/// Vertices carry no collinear interior points, so two polygons are equal
/// exactly when their slope lists are. The chain always starts at (0, y0);
/// for every polygon built here y0 = 0.
class PolygonData {
public:
    PolygonData() = default;

    /// Chain of unit-length segments taken in the given order (not sorted).
    static PolygonData from_slopes(std::vector<Rational> slopes, Rational start_y = Rational(0));

    /// Lower convex hull of the given points. Points need not be sorted but
    /// must have distinct x; the leftmost point must be at x = 0.
    static PolygonData lower_hull(std::vector<std::pair<std::int64_t, Rational>> points);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Rational>& slopes() const { return slopes_; }

    std::int64_t width() const { return static_cast<std::int64_t>(slopes_.size()); }
    Vertex endpoint() const { return vertices_.empty() ? Vertex{} : vertices_.back(); }
    bool empty() const { return slopes_.empty(); }

    /// Height of the chain at integer abscissa 0 <= x <= width().
    Rational y_at(std::int64_t x) const;

    /// Slopes nondecreasing.
    bool is_convex() const;

    friend bool operator==(const PolygonData& a, const PolygonData& b) {
        return a.slopes_ == b.slopes_ && a.start_y() == b.start_y();
    }

private:
    Rational start_y() const { return vertices_.empty() ? Rational(0) : vertices_.front().y; }

    std::vector<Vertex> vertices_;
    std::vector<Rational> slopes_;
};

/// True when `upper` lies on or above `lower` at every integer abscissa and
/// both share the same endpoint.
bool lies_on_or_above(const PolygonData& upper, const PolygonData& lower);

}  // namespace toricnp
