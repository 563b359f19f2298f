#pragma once

// Newton polytope of x^n + y + t/(xy): the triangle with vertices
// (-1,-1), (n,0), (0,1). Its cone is the whole plane and its denominator is n.

#include "toricnp/polygon.hpp"
#include "toricnp/rational.hpp"

#include <cstdint>
#include <vector>

namespace toricnp::geometry {

struct LatticePoint {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// All lattice points of weight k/n.
struct WeightLevel {
    int n = 0;
    int k = 0;
    std::vector<LatticePoint> points;  // sorted
    std::size_t count = 0;
};

struct HodgeData {
    int n = 0;
    std::vector<std::int64_t> W;  // W[k] = #points of weight k/n, 0 <= k <= 2n
    std::vector<std::int64_t> H;  // Hodge numbers, 0 <= k <= 2n
    PolygonData polygon;          // left empty by hodge_numbers()
};

/// a/n + b + ((2n+1)/n) * max(0, -a, -b).
Rational weight(int n, LatticePoint pt);

/// Scans a box around (k/n)·triangle and keeps exact-weight hits.
WeightLevel enumerate_weight_level(int n, int k);

/// W and H for 0 <= k <= 2n. Throws std::logic_error if the Hodge numbers
/// are negative or do not sum to 2n+1 (twice the triangle's area).
HodgeData hodge_numbers(int n);

/// Hodge polygon built from the Hodge numbers; checked against the closed
/// form (unit segments with slopes 0, 1/n, ..., 2n/n).
PolygonData hodge_polygon(int n);

}  // namespace toricnp::geometry
