#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace toricnp::gf {

/// Element of F_{p^d} in the polynomial basis 1, x, ..., x^{d-1}.
struct FieldElem {
    std::vector<std::uint32_t> coeffs;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

/// F_{p^d} = F_p[x]/(modulus). Immutable after construction.
class FiniteField {
public:
    std::uint64_t p() const { return p_; }
    int degree() const { return d_; }
    /// p^d
    std::uint64_t size() const { return size_; }
    /// p^d - 1
    std::uint64_t unit_order() const { return size_ - 1; }
    /// Monic, coefficients of x^0..x^d.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    const FieldElem& generator() const { return generator_; }
    /// tr(x^i) for 0 <= i < d.
    const std::vector<std::uint32_t>& trace_form() const { return trace_form_; }

    FieldElem zero() const;
    FieldElem one() const;
    /// The constant c mod p.
    FieldElem scalar(std::int64_t c) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem pow(FieldElem base, std::uint64_t exp) const;
    /// Throws std::domain_error for zero.
    FieldElem inv(const FieldElem& a) const;
    bool is_zero(const FieldElem& a) const;

    /// Base-p digits, constant term least significant; 0 <= index < p^d.
    FieldElem from_index(std::uint64_t index) const;
    std::uint64_t to_index(const FieldElem& a) const;

    /// Linear-form trace: sum_i a_i tr(x^i) mod p.
    std::uint32_t trace(const FieldElem& a) const;
    /// Direct evaluation of a + a^p + ... + a^{p^{d-1}}.
    std::uint32_t frobenius_trace(const FieldElem& a) const;

    /// Multiplicative order of a nonzero element, from the factorization of p^d - 1.
    std::uint64_t order(const FieldElem& a) const;

private:
    friend FiniteField build_field(std::uint64_t p, int d);

    std::uint64_t p_ = 0;
    int d_ = 0;
    std::uint64_t size_ = 0;
    std::vector<std::uint32_t> modulus_;
    // reduction_[k][i]: coefficient of x^i in x^{d+k} mod modulus, k = 0..d-2.
    std::vector<std::vector<std::uint32_t>> reduction_;
    FieldElem generator_;
    std::vector<std::uint32_t> trace_form_;
    std::vector<std::uint64_t> order_primes_;
};

/// Lexicographically smallest monic irreducible of degree d (lower
/// coefficients read as base-p digits, constant term fastest) and the
/// smallest primitive element in the same ordering. Requires p prime,
/// p < 2^32, d >= 1 and p^d <= 2^53.
FiniteField build_field(std::uint64_t p, int d);

/// True when the monic polynomial (coefficients x^0..x^d) is irreducible over F_p.
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint64_t p);

struct UnitItem {
    std::uint64_t index;
    FieldElem element;  // g^index
    std::uint32_t trace;
};

/// Walks g^0, g^1, ..., g^{p^d - 2} with one multiplication per step.
class UnitWalk {
public:
    explicit UnitWalk(const FiniteField& field);
    std::optional<UnitItem> next();

private:
    const FiniteField* field_;
    std::uint64_t index_ = 0;
    FieldElem current_;
};

/// tr(g^i) for 0 <= i < p^d - 1.
std::vector<std::uint16_t> trace_table(const FiniteField& field);

}  // namespace toricnp::gf
