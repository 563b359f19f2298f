#include "toricnp/gf.hpp"

#include "toricnp/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toricnp::gf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Poly = std::vector<u64>;  // coefficients mod p, low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m for monic-or-not m over F_p.
Poly poly_mod(Poly a, const Poly& m, u64 p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const u64 lead_inv = *nt::inv_mod(m.back(), p);
    while (a.size() > dm && !a.empty()) {
        const u64 c = nt::mul_mod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p - nt::mul_mod(c, m[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + nt::mul_mod(a[i], b[j], p)) % p;
        }
    }
    return poly_mod(std::move(prod), m, p);
}

Poly poly_powmod(Poly base, u64 exp, const Poly& m, u64 p) {
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    while (exp > 0) {
        if (exp & 1) result = poly_mulmod(result, base, m, p);
        base = poly_mulmod(base, base, m, p);
        exp >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint64_t p) {
    const int d = static_cast<int>(monic.size()) - 1;
    if (d < 1 || monic.back() != 1) throw std::invalid_argument("is_irreducible: expects a monic polynomial");
    if (d == 1) return true;
    Poly f(monic.begin(), monic.end());
    if (f[0] == 0) return false;
    // Ben-Or: f is irreducible iff gcd(x^{p^i} - x, f) = 1 for 1 <= i <= d/2.
    Poly xpow{0, 1};
    for (int i = 1; i <= d / 2; ++i) {
        xpow = poly_powmod(xpow, p, f, p);
        Poly h = xpow;
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        trim(h);
        if (h.empty()) return false;
        if (poly_gcd(f, h, p).size() != 1) return false;
    }
    return true;
}

FieldElem FiniteField::zero() const { return FieldElem{std::vector<std::uint32_t>(d_, 0)}; }

FieldElem FiniteField::one() const { return scalar(1); }

FieldElem FiniteField::scalar(std::int64_t c) const {
    FieldElem e = zero();
    std::int64_t r = c % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    e.coeffs[0] = static_cast<std::uint32_t>(r);
    return e;
}

FieldElem FiniteField::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem r = zero();
    for (int i = 0; i < d_; ++i) r.coeffs[i] = static_cast<std::uint32_t>((u64{a.coeffs[i]} + b.coeffs[i]) % p_);
    return r;
}

FieldElem FiniteField::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem r = zero();
    for (int i = 0; i < d_; ++i) r.coeffs[i] = static_cast<std::uint32_t>((u64{a.coeffs[i]} + p_ - b.coeffs[i]) % p_);
    return r;
}

FieldElem FiniteField::mul(const FieldElem& a, const FieldElem& b) const {
    const int d = d_;
    std::vector<u128> prod(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < d; ++j) prod[i + j] += u64{a.coeffs[i]} * b.coeffs[j];
    }
    std::vector<u64> high(d > 1 ? d - 1 : 0);
    for (int k = 0; k + 1 < d; ++k) high[k] = static_cast<u64>(prod[d + k] % p_);
    FieldElem r = zero();
    for (int i = 0; i < d; ++i) {
        u128 acc = prod[i] % p_;
        for (int k = 0; k + 1 < d; ++k) acc += u128{high[k]} * reduction_[k][i];
        r.coeffs[i] = static_cast<std::uint32_t>(acc % p_);
    }
    return r;
}

FieldElem FiniteField::pow(FieldElem base, std::uint64_t exp) const {
    FieldElem result = one();
    while (exp > 0) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

bool FiniteField::is_zero(const FieldElem& a) const {
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

FieldElem FiniteField::inv(const FieldElem& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero field element");
    return pow(a, size_ - 2);
}

FieldElem FiniteField::from_index(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("field index out of range");
    FieldElem e = zero();
    for (int i = 0; i < d_; ++i) {
        e.coeffs[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

std::uint64_t FiniteField::to_index(const FieldElem& a) const {
    std::uint64_t index = 0;
    for (int i = d_ - 1; i >= 0; --i) index = index * p_ + a.coeffs[i];
    return index;
}

std::uint32_t FiniteField::trace(const FieldElem& a) const {
    u128 acc = 0;
    for (int i = 0; i < d_; ++i) acc += u64{a.coeffs[i]} * trace_form_[i];
    return static_cast<std::uint32_t>(acc % p_);
}

std::uint32_t FiniteField::frobenius_trace(const FieldElem& a) const {
    FieldElem sum = zero();
    FieldElem term = a;
    for (int i = 0; i < d_; ++i) {
        sum = add(sum, term);
        term = pow(term, p_);
    }
    for (int i = 1; i < d_; ++i) {
        if (sum.coeffs[i] != 0) throw std::logic_error("Frobenius trace left the prime field");
    }
    return sum.coeffs[0];
}

std::uint64_t FiniteField::order(const FieldElem& a) const {
    if (is_zero(a)) throw std::domain_error("order of zero");
    std::uint64_t ord = unit_order();
    for (std::uint64_t r : order_primes_) {
        while (ord % r == 0 && pow(a, ord / r) == one()) ord /= r;
    }
    return ord;
}

FiniteField build_field(std::uint64_t p, int d) {
    if (d < 1) throw std::invalid_argument("field degree must be >= 1");
    if (p < 2 || p >= (1ULL << 32) || !nt::is_prime(p)) {
        throw std::invalid_argument("field characteristic must be a prime below 2^32");
    }
    auto size = nt::checked_pow(p, static_cast<unsigned>(d));
    if (!size || *size > (1ULL << 53)) {
        throw std::overflow_error("field size p^d exceeds 2^53 (p=" + std::to_string(p) +
                                  ", d=" + std::to_string(d) + ")");
    }

    FiniteField F;
    F.p_ = p;
    F.d_ = d;
    F.size_ = *size;

    // Monic modulus search: lower coefficients enumerated as base-p digits.
    const std::uint64_t lower_count = *size;
    for (std::uint64_t code = 0; code < lower_count; ++code) {
        std::vector<std::uint32_t> f(d + 1);
        std::uint64_t c = code;
        for (int i = 0; i < d; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        f[d] = 1;
        if (is_irreducible(f, p)) {
            F.modulus_ = std::move(f);
            break;
        }
    }
    if (F.modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

    const Poly modulus(F.modulus_.begin(), F.modulus_.end());
    for (int k = 0; k + 1 < d; ++k) {
        Poly xk(d + k + 1, 0);
        xk[d + k] = 1;
        Poly r = poly_mod(std::move(xk), modulus, p);
        r.resize(d, 0);
        F.reduction_.emplace_back(r.begin(), r.end());
    }

    // Trace form from the Frobenius definition, one basis monomial at a time.
    F.trace_form_.assign(d, 0);
    for (int i = 0; i < d; ++i) {
        FieldElem e = F.zero();
        e.coeffs[i] = 1;
        F.trace_form_[i] = F.frobenius_trace(e);
    }

    for (const auto& f : nt::factorize(F.unit_order())) F.order_primes_.push_back(f.prime);
    for (std::uint64_t code = 1; code < F.size_; ++code) {
        FieldElem g = F.from_index(code);
        bool primitive = std::all_of(F.order_primes_.begin(), F.order_primes_.end(), [&](std::uint64_t r) {
            return !(F.pow(g, F.unit_order() / r) == F.one());
        });
        if (primitive) {
            F.generator_ = std::move(g);
            return F;
        }
    }
    throw std::logic_error("no primitive element found");
}

UnitWalk::UnitWalk(const FiniteField& field) : field_(&field), current_(field.one()) {}

std::optional<UnitItem> UnitWalk::next() {
    if (index_ >= field_->unit_order()) {
        if (index_ == field_->unit_order() && !(current_ == field_->one())) {
            throw std::logic_error("generator power did not return to 1");
        }
        return std::nullopt;
    }
    UnitItem item{index_, current_, field_->trace(current_)};
    current_ = field_->mul(current_, field_->generator());
    ++index_;
    return item;
}

std::vector<std::uint16_t> trace_table(const FiniteField& field) {
    if (field.p() > 65535) throw std::invalid_argument("trace_table supports p < 65536");
    std::vector<std::uint16_t> table(field.unit_order());
    UnitWalk walk(field);
    while (auto item = walk.next()) table[item->index] = static_cast<std::uint16_t>(item->trace);
    return table;
}

}  // namespace toricnp::gf
