#pragma once

// Exact arithmetic in Z[zeta_p] (power basis zeta^0..zeta^{p-2}) and the
// valuation at the prime pi = 1 - zeta_p above p.

#include "toricnp/rational.hpp"

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace toricnp::cyclo {

/// Thrown by ord_p on zero, whose valuation is infinite.
class InfiniteValuation : public std::domain_error {
public:
    InfiniteValuation() : std::domain_error("valuation of zero is infinite") {}
};

class CycInt {
public:
    CycInt() = default;
    /// Zero of Z[zeta_p]; p must be an odd prime or 2.
    explicit CycInt(int p);

    static CycInt from_integer(int p, const mpz_class& c);
    static CycInt zeta_power(int p, std::int64_t v);
    /// sum_v counts[v] zeta^v, for a length-p vector (any integers).
    static CycInt from_counts(int p, std::span<const mpz_class> counts);
    static CycInt from_counts(int p, std::span<const std::uint64_t> counts);
    /// Canonical element from raw coordinates zeta^0..zeta^{p-2}.
    static CycInt from_coeffs(int p, std::vector<mpz_class> coeffs);

    int p() const { return p_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True when the element is a rational integer (only the zeta^0 coordinate set).
    bool is_rational() const;
    /// gcd of the coordinates (0 for zero).
    mpz_class content() const;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const mpz_class& c);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator-(const CycInt& a) { return CycInt(a.p_) - a; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend CycInt operator*(CycInt a, const mpz_class& c) { return a *= c; }
    friend bool operator==(const CycInt& a, const CycInt& b) { return a.p_ == b.p_ && a.coeffs_ == b.coeffs_; }

    /// Exact division by a rational integer; throws std::domain_error if inexact.
    CycInt divexact(const mpz_class& c) const;
    /// Exact division in Z[zeta_p]; throws std::domain_error if the quotient is not integral.
    CycInt divexact(const CycInt& d) const;
    /// sigma_j: zeta -> zeta^j, gcd(j, p) = 1.
    CycInt galois(std::int64_t j) const;
    /// Absolute norm to Q.
    mpz_class norm() const;
    /// Image under zeta -> exp(2 pi i k / p).
    std::complex<long double> embed(std::int64_t k = 1) const;

private:
    void check_same(const CycInt& o) const;

    int p_ = 0;
    std::vector<mpz_class> coeffs_;
};

/// Element of Q(zeta_p) written as numerator / positive integer denominator,
/// kept with gcd(content(numerator), denominator) = 1.
class CycRat {
public:
    CycRat() = default;
    explicit CycRat(CycInt numerator, mpz_class denominator = 1);

    const CycInt& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }
    bool is_integral() const { return den_ == 1; }
    /// Throws std::domain_error unless integral.
    CycInt to_integral() const;

    CycRat& operator+=(const CycRat& o);
    CycRat& operator-=(const CycRat& o);
    CycRat& operator*=(const CycRat& o);
    CycRat& operator/=(const mpz_class& c);
    friend CycRat operator+(CycRat a, const CycRat& b) { return a += b; }
    friend CycRat operator-(CycRat a, const CycRat& b) { return a -= b; }
    friend CycRat operator*(CycRat a, const CycRat& b) { return a *= b; }
    friend CycRat operator/(CycRat a, const mpz_class& c) { return a /= c; }
    friend bool operator==(const CycRat& a, const CycRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    void normalize();

    CycInt num_;
    mpz_class den_{1};
};

/// v with x = (1 - zeta)^v * unit; nullopt for zero.
std::optional<std::int64_t> pi_valuation(const CycInt& x);

/// pi_valuation(x) / (p - 1), so ord_p(p) = 1. Throws InfiniteValuation for zero.
Rational ord_p(const CycInt& x);

}  // namespace toricnp::cyclo
