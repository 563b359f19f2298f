#pragma once

// Slow, independent reference computations used as ground truth by the tests.
// Nothing here calls into the library's field, sum, valuation or hull code.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ref {

// n * weight(a, b), an integer.
inline std::int64_t scaled_weight(int n, std::int64_t a, std::int64_t b) {
    return a + static_cast<std::int64_t>(n) * b + (2 * n + 1) * std::max<std::int64_t>({0, -a, -b});
}

// Points of weight k/n from a deliberately oversized box.
inline std::vector<std::pair<std::int64_t, std::int64_t>> weight_level(int n, int k) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    const std::int64_t R = 3 * k + 6;
    for (std::int64_t a = -R; a <= R; ++a) {
        for (std::int64_t b = -R; b <= R; ++b) {
            if (scaled_weight(n, a, b) == k) out.emplace_back(a, b);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// F_{p^d} as vectors of coefficients modulo a brute-force irreducible.

class SmallField {
public:
    using Elem = std::vector<int>;

    SmallField(int p, int d) : p_(p), d_(d) {
        modulus_ = find_irreducible();
        q_ = 1;
        for (int i = 0; i < d_; ++i) q_ *= p_;
    }

    int p() const { return p_; }
    int d() const { return d_; }
    int q() const { return q_; }

    Elem elem(int index) const {
        Elem e(d_);
        for (int i = 0; i < d_; ++i) {
            e[i] = index % p_;
            index /= p_;
        }
        return e;
    }

    int index(const Elem& e) const {
        int r = 0;
        for (int i = d_ - 1; i >= 0; --i) r = r * p_ + e[i];
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<long long> prod(2 * d_ - 1, 0);
        for (int i = 0; i < d_; ++i) {
            for (int j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + static_cast<long long>(a[i]) * b[j]) % p_;
        }
        // modulus_ is monic of degree d_, stored low to high (d_ + 1 entries).
        for (int top = 2 * d_ - 2; top >= d_; --top) {
            const long long c = prod[top];
            if (c == 0) continue;
            for (int i = 0; i <= d_; ++i) {
                prod[top - d_ + i] = ((prod[top - d_ + i] - c * modulus_[i]) % p_ + p_) % p_;
            }
        }
        Elem r(d_);
        for (int i = 0; i < d_; ++i) r[i] = static_cast<int>(prod[i]);
        return r;
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = elem(1);
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Sum of the Frobenius conjugates; the result lies in F_p.
    int trace(const Elem& a) const {
        Elem acc(d_, 0);
        Elem x = a;
        for (int i = 0; i < d_; ++i) {
            for (int j = 0; j < d_; ++j) acc[j] = (acc[j] + x[j]) % p_;
            x = pow(x, static_cast<std::uint64_t>(p_));
        }
        for (int j = 1; j < d_; ++j) {
            if (acc[j] != 0) throw std::logic_error("trace left the prime field");
        }
        return acc[0];
    }

private:
    // Smallest monic polynomial with no monic factor of degree 1..d/2.
    std::vector<int> find_irreducible() const {
        int count = 1;
        for (int i = 0; i < d_; ++i) count *= p_;
        for (int code = 0; code < count; ++code) {
            std::vector<int> f(d_ + 1);
            int c = code;
            for (int i = 0; i < d_; ++i) {
                f[i] = c % p_;
                c /= p_;
            }
            f[d_] = 1;
            if (d_ == 1 || !has_small_factor(f)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    bool divides(const std::vector<int>& g, std::vector<int> f) const {
        const int dg = static_cast<int>(g.size()) - 1;
        for (int top = static_cast<int>(f.size()) - 1; top >= dg; --top) {
            const int c = f[top];
            if (c == 0) continue;
            for (int i = 0; i <= dg; ++i) f[top - dg + i] = ((f[top - dg + i] - c * g[i]) % p_ + p_) % p_;
        }
        for (int i = 0; i < dg; ++i) {
            if (f[i] != 0) return false;
        }
        return true;
    }

    bool has_small_factor(const std::vector<int>& f) const {
        for (int e = 1; e <= d_ / 2; ++e) {
            int count = 1;
            for (int i = 0; i < e; ++i) count *= p_;
            for (int code = 0; code < count; ++code) {
                std::vector<int> g(e + 1);
                int c = code;
                for (int i = 0; i < e; ++i) {
                    g[i] = c % p_;
                    c /= p_;
                }
                g[e] = 1;
                if (divides(g, f)) return true;
            }
        }
        return false;
    }

    int p_;
    int d_;
    int q_ = 1;
    std::vector<int> modulus_;
};

// Histogram M_v of tr(c1 x^n + c2 y + c3t/(xy)) over (x, y) in (F*_{p^d})^2,
// using multiplication tables built from scratch.
inline std::vector<std::uint64_t> toric_histogram(int n, int p, int d, std::int64_t c1, std::int64_t c2,
                                                  std::int64_t c3t) {
    const SmallField F(p, d);
    const int q = F.q();
    auto red = [p](std::int64_t c) { return static_cast<int>(((c % p) + p) % p); };
    const int a1 = red(c1), a2 = red(c2), a3 = red(c3t);

    std::vector<int> tr(q), trpow(q), inv(q, 0);
    std::vector<SmallField::Elem> elems(q);
    for (int i = 0; i < q; ++i) elems[i] = F.elem(i);
    for (int i = 1; i < q; ++i) {
        tr[i] = F.trace(elems[i]);
        trpow[i] = F.trace(F.pow(elems[i], static_cast<std::uint64_t>(n)));
    }
    for (int i = 1; i < q; ++i) {
        if (inv[i] != 0) continue;
        for (int j = 1; j < q; ++j) {
            if (F.index(F.mul(elems[i], elems[j])) == 1) {
                inv[i] = j;
                inv[j] = i;
                break;
            }
        }
    }
    std::vector<std::uint64_t> hist(p, 0);
    for (int x = 1; x < q; ++x) {
        for (int y = 1; y < q; ++y) {
            const int z = inv[F.index(F.mul(elems[x], elems[y]))];
            const std::int64_t v =
                static_cast<std::int64_t>(a1) * trpow[x] + static_cast<std::int64_t>(a2) * tr[y] +
                static_cast<std::int64_t>(a3) * tr[z];
            ++hist[v % p];
        }
    }
    return hist;
}

// ---------------------------------------------------------------------------
// Valuations through the norm: v_pi(x) = v_p(N(x)) since p is totally
// ramified in Q(zeta_p). The norm is the resultant Res(Phi_p, x), taken as a
// Sylvester determinant with fraction-free elimination.

inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// coeffs: x = sum coeffs[i] zeta^i (any length); returns |N(x)|.
inline mpz_class norm_abs(int p, std::vector<mpz_class> coeffs) {
    // Reduce modulo T^p - 1 then modulo Phi_p (coefficient of zeta^{p-1}).
    std::vector<mpz_class> c(p, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i % p] += coeffs[i];
    for (int i = 0; i + 1 < p; ++i) c[i] -= c[p - 1];
    c.pop_back();
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) return 0;
    const int m = p - 1;                        // deg Phi_p
    const int e = static_cast<int>(c.size()) - 1;  // deg x
    if (e == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), c[0].get_mpz_t(), static_cast<unsigned long>(m));
        return abs(r);
    }
    const int size = m + e;
    std::vector<std::vector<mpz_class>> S(size, std::vector<mpz_class>(size, 0));
    for (int r = 0; r < e; ++r) {
        for (int i = 0; i <= m; ++i) S[r][r + i] = 1;  // Phi_p has all coefficients 1
    }
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i <= e; ++i) S[e + r][r + i] = c[e - i];
    }
    return abs(bareiss_det(std::move(S)));
}

inline int pi_valuation_via_norm(int p, const std::vector<mpz_class>& coeffs) {
    mpz_class N = norm_abs(p, coeffs);
    if (N == 0) throw std::domain_error("zero");
    int v = 0;
    while (N % p == 0) {
        N /= p;
        ++v;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Lower hull by brute force: the height at x is the minimum over chords of
// pairs of points straddling x. Returns heights at integer x as fractions.

inline std::vector<mpq_class> hull_heights(const std::vector<std::pair<int, mpq_class>>& pts, int width) {
    std::vector<mpq_class> h(width + 1);
    for (int x = 0; x <= width; ++x) {
        bool set = false;
        mpq_class best;
        for (const auto& [xa, ya] : pts) {
            for (const auto& [xb, yb] : pts) {
                if (!(xa <= x && x <= xb)) continue;
                mpq_class y = xa == xb ? ya : ya + (yb - ya) * mpq_class(x - xa, xb - xa);
                y.canonicalize();
                if (xa == xb && xa != x) continue;
                if (!set || y < best) {
                    best = y;
                    set = true;
                }
            }
        }
        if (!set) throw std::logic_error("hull undefined");
        h[x] = best;
    }
    return h;
}

}  // namespace ref
