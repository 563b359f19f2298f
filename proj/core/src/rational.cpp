#include "toricnp/rational.hpp"

#include <stdexcept>

namespace toricnp {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace toricnp
