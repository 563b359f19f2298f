#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace toricnp {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}                  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}                   // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& value) : value_(value) {}      // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den);
    explicit Rational(const mpq_class& value);

    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }

    /// "a" when integral, otherwise "a/b".
    std::string str() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

Rational abs(const Rational& r);

}  // namespace toricnp
