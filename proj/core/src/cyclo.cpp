#include "toricnp/cyclo.hpp"

#include "toricnp/numtheory.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <string>

namespace toricnp::cyclo {

namespace {

void require_prime(int p) {
    if (p < 2 || !nt::is_prime(static_cast<nt::u64>(p))) {
        throw std::invalid_argument("cyclotomic modulus must be prime, got " + std::to_string(p));
    }
}

// Length-p coordinates modulo zeta^p = 1 -> canonical length p-1 form
// using zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
std::vector<mpz_class> reduce_cyclic(std::vector<mpz_class> c) {
    const std::size_t p = c.size();
    const mpz_class top = c[p - 1];
    c.pop_back();
    if (top != 0) {
        for (auto& x : c) x -= top;
    }
    return c;
}

}  // namespace

CycInt::CycInt(int p) : p_(p) {
    require_prime(p);
    coeffs_.assign(static_cast<std::size_t>(p - 1), mpz_class(0));
}

CycInt CycInt::from_integer(int p, const mpz_class& c) {
    CycInt x(p);
    x.coeffs_[0] = c;
    return x;
}

CycInt CycInt::zeta_power(int p, std::int64_t v) {
    CycInt x(p);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    std::vector<mpz_class> c(static_cast<std::size_t>(p), mpz_class(0));
    c[static_cast<std::size_t>(r)] = 1;
    x.coeffs_ = reduce_cyclic(std::move(c));
    return x;
}

CycInt CycInt::from_counts(int p, std::span<const mpz_class> counts) {
    CycInt x(p);
    if (counts.size() != static_cast<std::size_t>(p)) throw std::invalid_argument("from_counts: need p entries");
    x.coeffs_ = reduce_cyclic(std::vector<mpz_class>(counts.begin(), counts.end()));
    return x;
}

CycInt CycInt::from_counts(int p, std::span<const std::uint64_t> counts) {
    std::vector<mpz_class> big;
    big.reserve(counts.size());
    for (std::uint64_t c : counts) {
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, -1, sizeof(c), 0, 0, &c);
        big.push_back(std::move(z));
    }
    return from_counts(p, std::span<const mpz_class>(big));
}

CycInt CycInt::from_coeffs(int p, std::vector<mpz_class> coeffs) {
    CycInt x(p);
    if (coeffs.size() != static_cast<std::size_t>(p - 1)) {
        throw std::invalid_argument("from_coeffs: need p-1 coordinates");
    }
    x.coeffs_ = std::move(coeffs);
    return x;
}

bool CycInt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CycInt::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

mpz_class CycInt::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void CycInt::check_same(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixing cyclotomic rings of different p");
}

CycInt& CycInt::operator+=(const CycInt& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycInt& CycInt::operator*=(const mpz_class& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    a.check_same(b);
    const std::size_t p = static_cast<std::size_t>(a.p_);
    std::vector<mpz_class> acc(p, mpz_class(0));
    for (std::size_t i = 0; i + 1 < p; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j + 1 < p; ++j) {
            std::size_t k = i + j;
            if (k >= p) k -= p;
            mpz_addmul(acc[k].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    CycInt r(a.p_);
    r.coeffs_ = reduce_cyclic(std::move(acc));
    return r;
}

CycInt CycInt::divexact(const mpz_class& c) const {
    if (c == 0) throw std::domain_error("division by zero");
    CycInt r(*this);
    for (auto& x : r.coeffs_) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
            throw std::domain_error("inexact division of cyclotomic integer by " + c.get_str());
        }
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return r;
}

CycInt CycInt::galois(std::int64_t j) const {
    std::int64_t jr = j % p_;
    if (jr < 0) jr += p_;
    if (jr == 0) throw std::invalid_argument("galois: exponent divisible by p");
    std::vector<mpz_class> c(static_cast<std::size_t>(p_), mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        c[static_cast<std::size_t>((static_cast<std::int64_t>(i) * jr) % p_)] = coeffs_[i];
    }
    CycInt r(p_);
    r.coeffs_ = reduce_cyclic(std::move(c));
    return r;
}

namespace {

// prod_{j=2}^{p-1} sigma_j(x): x times this is the norm.
CycInt conjugate_product(const CycInt& x) {
    CycInt prod = CycInt::from_integer(x.p(), 1);
    for (int j = 2; j < x.p(); ++j) prod = prod * x.galois(j);
    return prod;
}

}  // namespace

mpz_class CycInt::norm() const {
    if (p_ == 2) return coeffs_[0];
    CycInt n = *this * conjugate_product(*this);
    if (!n.is_rational()) throw std::logic_error("norm is not rational");
    return n.coeffs_[0];
}

CycInt CycInt::divexact(const CycInt& d) const {
    check_same(d);
    if (d.is_zero()) throw std::domain_error("division by zero cyclotomic integer");
    if (d.is_rational()) return divexact(d.coeffs_[0]);
    const CycInt conj = conjugate_product(d);
    const CycInt n = d * conj;
    if (!n.is_rational()) throw std::logic_error("norm is not rational");
    return (*this * conj).divexact(n.coeffs_[0]);
}

std::complex<long double> CycInt::embed(std::int64_t k) const {
    std::complex<long double> sum = 0;
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const long double angle = two_pi * static_cast<long double>((static_cast<std::int64_t>(i) * k) % p_) / p_;
        sum += static_cast<long double>(coeffs_[i].get_d()) * std::polar(1.0L, angle);
    }
    return sum;
}

CycRat::CycRat(CycInt numerator, mpz_class denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw std::domain_error("CycRat: zero denominator");
    normalize();
}

void CycRat::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    mpz_class g = num_.content();
    if (g == 0) {
        den_ = 1;
        return;
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ = num_.divexact(g);
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

CycInt CycRat::to_integral() const {
    if (!is_integral()) throw std::domain_error("cyclotomic value has denominator " + den_.get_str());
    return num_;
}

CycRat& CycRat::operator+=(const CycRat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

CycRat& CycRat::operator-=(const CycRat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

CycRat& CycRat::operator*=(const CycRat& o) {
    num_ = num_ * o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

CycRat& CycRat::operator/=(const mpz_class& c) {
    if (c == 0) throw std::domain_error("CycRat: division by zero");
    den_ *= c;
    normalize();
    return *this;
}

std::optional<std::int64_t> pi_valuation(const CycInt& x) {
    if (x.is_zero()) return std::nullopt;
    const int p = x.p();
    const mpz_class prime = p;

    // p = (1 - zeta)^{p-1} * unit, so each factor p in the content counts p-1.
    mpz_class g = x.content();
    mpz_class rest;
    const auto e = static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), g.get_mpz_t(), prime.get_mpz_t()));
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(e));
    std::vector<mpz_class> c = x.divexact(pe).coeffs();
    std::int64_t v = e * (p - 1);

    for (;;) {
        // zeta = 1 mod pi, so x = x(1) mod pi.
        mpz_class s = std::accumulate(c.begin(), c.end(), mpz_class(0));
        if (!mpz_divisible_p(s.get_mpz_t(), prime.get_mpz_t())) return v;
        mpz_class s_over_p;
        mpz_divexact(s_over_p.get_mpz_t(), s.get_mpz_t(), prime.get_mpz_t());
        // z = x - (x(1)/p) * Phi_p has z(1) = 0; divide by (1 - T) synthetically.
        mpz_class carry = 0;
        for (auto& ci : c) {
            ci -= s_over_p;
            ci += carry;
            carry = ci;
        }
        // Top coordinate of z is -s/p; it must cancel the running sum.
        if (carry - s_over_p != 0) throw std::logic_error("pi-division left a remainder");
        ++v;
    }
}

Rational ord_p(const CycInt& x) {
    auto v = pi_valuation(x);
    if (!v) throw InfiniteValuation();
    return Rational(mpz_class(static_cast<long>(*v)), mpz_class(x.p() - 1));
}

}  // namespace toricnp::cyclo
