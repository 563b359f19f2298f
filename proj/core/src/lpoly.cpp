#include "toricnp/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace toricnp::oracle {

int LPolynomial::degree() const {
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
        if (!coeffs[j].is_zero()) return j;
    }
    return -1;
}

std::vector<CycInt> lpoly_from_power_sums(int p, std::span<const CycInt> power_sums) {
    const std::size_t K = power_sums.size();
    if (K == 0) throw std::invalid_argument("need at least one power sum");
    std::vector<CycInt> e;
    e.reserve(K + 1);
    e.push_back(CycInt::from_integer(p, 1));
    for (std::size_t k = 1; k <= K; ++k) {
        CycInt acc(p);
        for (std::size_t i = 1; i <= k; ++i) {
            const CycInt term = e[k - i] * power_sums[i - 1];
            if (i % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        const cyclo::CycRat ek = cyclo::CycRat(std::move(acc)) / mpz_class(static_cast<unsigned long>(k));
        if (!ek.is_integral()) {
            throw ConsistencyError("Newton identity e_" + std::to_string(k) + " is not integral (denominator " +
                                   ek.denominator().get_str() + ")");
        }
        e.push_back(ek.to_integral());
    }
    return e;
}

namespace {

mpz_class p_power(int p, long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(exp));
    return r;
}

}  // namespace

Completion complete_by_functional_equation(int n, int p, std::span<const CycInt> e_f, std::span<const CycInt> e_c) {
    const int D = 2 * n + 1;
    const int Kf = static_cast<int>(e_f.size()) - 1;
    const int Kc = static_cast<int>(e_c.size()) - 1;
    if (Kf < 0 || Kc < 0) throw std::invalid_argument("coefficient lists must contain e_0");

    Completion out;
    out.coeffs.assign(static_cast<std::size_t>(D + 1), CycInt(p));
    for (int i = 0; i <= std::min(Kf, D); ++i) out.coeffs[i] = e_f[i];

    // e_c[j] * e_D = q^{2j} e_{D-j}: solve with the largest usable j.
    int pivot = 0;
    for (int j = std::min(Kc, D); j >= 1; --j) {
        if (D - j > Kf) break;
        if (!e_c[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    CycInt eD(p);
    if (Kf >= D) {
        eD = e_f[D];
    } else {
        if (pivot == 0) {
            throw DegenerateCompletion("no nonzero companion coefficient pairs with a known coefficient of f");
        }
        const CycInt lhs = e_f[D - pivot] * p_power(p, 2L * pivot);
        try {
            eD = lhs.divexact(e_c[pivot]);
        } catch (const std::domain_error&) {
            throw ConsistencyError("e_D is not integral from companion index " + std::to_string(pivot));
        }
        out.coeffs[D] = eD;
    }
    out.pivot = pivot;
    if (eD.is_zero()) throw ConsistencyError("leading coefficient e_D vanished");

    for (int i = Kf + 1; i < D; ++i) {
        const int j = D - i;
        if (j > Kc) throw DegenerateCompletion("companion coefficient e_" + std::to_string(j) + " not available");
        try {
            out.coeffs[i] = (e_c[j] * eD).divexact(p_power(p, 2L * j));
        } catch (const std::domain_error&) {
            throw ConsistencyError("completed e_" + std::to_string(i) + " is not integral");
        }
    }

    // Every pair (i, j = D - i) with e_i of f and e_c[j] both known, except
    // the pivot pair that defined e_D.
    for (int j = 0; j <= std::min(Kc, D); ++j) {
        const int i = D - j;
        if (i > Kf || (j == pivot && Kf < D)) continue;
        if (!(e_c[j] * eD == e_f[i] * p_power(p, 2L * j))) {
            throw ConsistencyError("functional equation fails at index pair (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ")");
        }
        ++out.cross_checks;
    }
    return out;
}

SumSpec companion_spec(const SumSpec& spec) {
    SumSpec c = spec;
    if (spec.n % 2 == 1) {
        c.c3 = -spec.c3;
    } else {
        c.c1 = -spec.c1;
    }
    return c;
}

NewtonData newton_polygon_of(const LPolynomial& lpoly) {
    if (lpoly.coeffs.empty() || !(lpoly.coeffs[0] == CycInt::from_integer(lpoly.p, 1))) {
        throw std::invalid_argument("L-polynomial must have e_0 = 1");
    }
    NewtonData out;
    std::vector<std::pair<std::int64_t, Rational>> points;
    const int last = lpoly.degree();
    for (int k = 0; k < static_cast<int>(lpoly.coeffs.size()); ++k) {
        const CycInt& c = lpoly.coeffs[k];
        if (c.is_zero()) {
            out.coefficient_ords.emplace_back(std::nullopt);
            continue;
        }
        Rational ord = cyclo::ord_p(c) / Rational(lpoly.a);
        out.coefficient_ords.emplace_back(ord);
        if (k <= last) points.emplace_back(k, std::move(ord));
    }
    out.polygon = PolygonData::lower_hull(std::move(points));
    return out;
}

double purity_deviation(const LPolynomial& lpoly) {
    const int D = lpoly.degree();
    if (D < 1) return 0.0;
    // Roots u = beta / q of sum_j (-1)^j (e_j / q^j) u^{D-j}.
    const long double q = std::pow(static_cast<long double>(lpoly.p), lpoly.a);
    std::vector<std::complex<long double>> a(D + 1);
    long double qpow = 1.0L;
    for (int j = 0; j <= D; ++j) {
        a[j] = lpoly.coeffs[j].embed(1) / qpow * static_cast<long double>(j % 2 == 0 ? 1 : -1);
        qpow *= q;
    }
    using Matrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;
    Matrix companion = Matrix::Zero(D, D);
    for (int i = 1; i < D; ++i) companion(i, i - 1) = 1.0;
    // u^D + sum_{j>=1} a_j u^{D-j}: the coefficient of u^i is a_{D-i}.
    for (int i = 0; i < D; ++i) {
        const std::complex<long double> c = -a[D - i] / a[0];
        companion(i, D - 1) = std::complex<double>(static_cast<double>(c.real()), static_cast<double>(c.imag()));
    }
    Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
    double worst = 0.0;
    for (int i = 0; i < D; ++i) worst = std::max(worst, std::abs(std::abs(solver.eigenvalues()[i]) - 1.0));
    return worst;
}

}  // namespace toricnp::oracle
