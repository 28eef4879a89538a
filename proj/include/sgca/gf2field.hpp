#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sgca/gf2poly.hpp"

namespace sgca {

// Element of GF(2^m) in exponent form: either alpha^exponent or the
// distinguished zero element (which has no exponent).
class FieldElement {
public:
    static FieldElement zero() { return FieldElement(); }
    static FieldElement power(std::uint64_t exponent)
    {
        FieldElement e;
        e.zero_ = false;
        e.exponent_ = exponent;
        return e;
    }

    bool is_zero() const noexcept { return zero_; }
    std::uint64_t exponent() const;

    bool operator==(const FieldElement&) const = default;

private:
    FieldElement() = default;
    bool zero_ = true;
    std::uint64_t exponent_ = 0;
};

// A concrete GF(2^m) given by a primitive modulus, with log and Zech
// logarithm tables. Tables are built eagerly for m <= eager_limit;
// above that, logs are computed on demand by baby-step giant-step.
// Read-only after construction.
class FieldContext {
public:
    explicit FieldContext(const Gf2Poly& modulus, std::size_t eager_limit = 20);

    const Gf2Poly& modulus() const noexcept { return modulus_; }
    std::size_t degree() const noexcept { return m_; }
    std::uint64_t order() const noexcept { return order_; }

    // alpha^e as a coefficient mask (bit i = coefficient of alpha^i).
    std::uint64_t alpha_pow(std::uint64_t e) const;

    // Discrete log of a nonzero element given as a coefficient mask.
    std::uint64_t log(std::uint64_t element) const;

    // zech(n) = log(1 + alpha^n); n must be nonzero mod the group order
    // (1 + alpha^0 = 0 has no logarithm).
    std::uint64_t zech(std::uint64_t n) const;

    FieldElement add(FieldElement a, FieldElement b) const;

private:
    std::uint64_t mulmod_bits(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t powmod_bits(std::uint64_t base, std::uint64_t e) const;

    Gf2Poly modulus_;
    std::uint64_t modulus_bits_ = 0;
    std::size_t m_ = 0;
    std::uint64_t order_ = 0;
    bool eager_ = false;

    std::vector<std::uint32_t> antilog_; // exponent -> mask
    std::vector<std::uint32_t> log_;     // mask -> exponent
    std::vector<std::uint32_t> zech_;    // n -> zech(n), index 0 unused

    // Lazy path: baby-step table and giant-step factor.
    std::uint64_t baby_span_ = 0;
    std::uint64_t giant_factor_ = 0; // alpha^{-baby_span_}
    std::unordered_map<std::uint64_t, std::uint32_t> baby_;
};

// Folds alpha^{k_1} + alpha^{k_2} + ... into a single field element.
// Exponents are taken as a multiset; equal pairs cancel before the
// remaining terms are combined through the Zech table.
FieldElement collapse_power_sum(const FieldContext& ctx, std::vector<std::uint64_t> exponents);

// Minimal polynomial over GF(2) of lambda^e, where lambda is a root of
// the primitive polynomial c2 (the characteristic polynomial of the
// cyclotomic coset of e).
Gf2Poly coset_min_poly(const Gf2Poly& c2, std::uint64_t e);

} // namespace sgca
