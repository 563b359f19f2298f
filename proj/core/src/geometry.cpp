#include "toricnp/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toricnp::geometry {

namespace {

void require_degree(int n) {
    if (n < 2) throw std::invalid_argument("family degree n must be >= 2, got " + std::to_string(n));
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a > 0) == (b > 0))) ++q;
    return q;
}

}  // namespace

Rational weight(int n, LatticePoint pt) {
    require_degree(n);
    const std::int64_t m = std::max<std::int64_t>({0, -pt.a, -pt.b});
    // (a + n*b + (2n+1)*m) / n
    return Rational(mpz_class(static_cast<long>(pt.a + n * pt.b + (2 * n + 1) * m)), mpz_class(n));
}

WeightLevel enumerate_weight_level(int n, int k) {
    require_degree(n);
    if (k < 0) throw std::invalid_argument("weight level k must be >= 0");
    WeightLevel level{n, k, {}, 0};
    const Rational target(k, n);
    const std::int64_t c = ceil_div(k, n);
    for (std::int64_t a = -c - 1; a <= k; ++a) {
        for (std::int64_t b = -c - 1; b <= c + 1; ++b) {
            if (weight(n, {a, b}) == target) level.points.push_back({a, b});
        }
    }
    std::sort(level.points.begin(), level.points.end());
    level.count = level.points.size();
    return level;
}

HodgeData hodge_numbers(int n) {
    require_degree(n);
    HodgeData data;
    data.n = n;
    const int top = 2 * n;
    data.W.resize(top + 1);
    data.H.resize(top + 1);
    for (int k = 0; k <= top; ++k) data.W[k] = static_cast<std::int64_t>(enumerate_weight_level(n, k).count);

    // Two variables: H(k) = W(k) - 2 W(k-n) + W(k-2n).
    static constexpr std::int64_t kBinom2[] = {1, 2, 1};
    std::int64_t total = 0;
    for (int k = 0; k <= top; ++k) {
        std::int64_t h = 0;
        for (int i = 0; i <= 2 && k - i * n >= 0; ++i) {
            h += (i % 2 == 0 ? 1 : -1) * kBinom2[i] * data.W[k - i * n];
        }
        if (h < 0) throw std::logic_error("negative Hodge number at k=" + std::to_string(k));
        data.H[k] = h;
        total += h;
    }
    if (total != 2 * n + 1) {
        throw std::logic_error("Hodge numbers sum to " + std::to_string(total) + ", expected " +
                               std::to_string(2 * n + 1));
    }
    return data;
}

PolygonData hodge_polygon(int n) {
    HodgeData data = hodge_numbers(n);
    std::vector<Rational> slopes;
    for (int k = 0; k <= 2 * n; ++k) {
        for (std::int64_t r = 0; r < data.H[k]; ++r) slopes.emplace_back(k, n);
    }
    PolygonData poly = PolygonData::from_slopes(std::move(slopes));

    std::vector<Rational> closed_form;
    for (int i = 0; i <= 2 * n; ++i) closed_form.emplace_back(i, n);
    if (poly.slopes() != closed_form) throw std::logic_error("Hodge polygon disagrees with closed form");
    return poly;
}

}  // namespace toricnp::geometry
