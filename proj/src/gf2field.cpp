#include "sgca/gf2field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sgca {

std::uint64_t FieldElement::exponent() const
{
    if (zero_)
        throw std::logic_error("zero field element has no exponent");
    return exponent_;
}

FieldContext::FieldContext(const Gf2Poly& modulus, std::size_t eager_limit)
    : modulus_(modulus)
{
    if (!is_primitive(modulus))
        throw std::invalid_argument("field modulus must be primitive");
    m_ = static_cast<std::size_t>(modulus.degree());
    if (m_ > 32)
        throw std::invalid_argument("field degree above supported bound");
    order_ = (std::uint64_t{1} << m_) - 1;
    for (std::size_t e : modulus.exponents())
        modulus_bits_ |= std::uint64_t{1} << e;

    eager_ = m_ <= eager_limit;
    if (eager_) {
        antilog_.resize(order_);
        log_.assign(std::uint64_t{1} << m_, 0);
        zech_.assign(order_, 0);
        std::uint64_t x = 1;
        for (std::uint64_t e = 0; e < order_; ++e) {
            antilog_[e] = static_cast<std::uint32_t>(x);
            log_[x] = static_cast<std::uint32_t>(e);
            x = mulmod_bits(x, 2); // multiply by alpha
        }
        if (x != 1)
            throw std::logic_error("field element order mismatch");
        for (std::uint64_t n = 1; n < order_; ++n)
            zech_[n] = log_[antilog_[n] ^ 1u];
    } else {
        baby_span_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order_))));
        std::uint64_t x = 1;
        baby_.reserve(baby_span_);
        for (std::uint64_t j = 0; j < baby_span_; ++j) {
            baby_.emplace(x, static_cast<std::uint32_t>(j));
            x = mulmod_bits(x, 2);
        }
        giant_factor_ = powmod_bits(2, order_ - baby_span_ % order_);
    }
}

std::uint64_t FieldContext::mulmod_bits(std::uint64_t a, std::uint64_t b) const
{
    std::uint64_t r = 0;
    while (b) {
        if (b & 1)
            r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> m_) & 1)
            a ^= modulus_bits_;
    }
    return r;
}

std::uint64_t FieldContext::powmod_bits(std::uint64_t base, std::uint64_t e) const
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mulmod_bits(r, base);
        base = mulmod_bits(base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldContext::alpha_pow(std::uint64_t e) const
{
    e %= order_;
    if (eager_)
        return antilog_[e];
    return powmod_bits(2, e);
}

std::uint64_t FieldContext::log(std::uint64_t element) const
{
    if (element == 0)
        throw std::invalid_argument("discrete log of zero");
    if (element >> m_)
        throw std::invalid_argument("element mask out of field range");
    if (eager_)
        return log_[element];

    std::uint64_t y = element;
    for (std::uint64_t i = 0; i * baby_span_ <= order_; ++i) {
        auto it = baby_.find(y);
        if (it != baby_.end())
            return (i * baby_span_ + it->second) % order_;
        y = mulmod_bits(y, giant_factor_);
    }
    throw std::logic_error("discrete log not found");
}

std::uint64_t FieldContext::zech(std::uint64_t n) const
{
    n %= order_;
    if (n == 0)
        throw std::domain_error("zech(0) is undefined: 1 + alpha^0 = 0");
    if (eager_)
        return zech_[n];
    return log(alpha_pow(n) ^ 1u);
}

FieldElement FieldContext::add(FieldElement a, FieldElement b) const
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    std::uint64_t ea = a.exponent() % order_;
    std::uint64_t eb = b.exponent() % order_;
    if (ea == eb)
        return FieldElement::zero();
    std::uint64_t lo = std::min(ea, eb);
    std::uint64_t hi = std::max(ea, eb);
    // alpha^lo + alpha^hi = alpha^lo * (1 + alpha^(hi-lo))
    return FieldElement::power((lo + zech(hi - lo)) % order_);
}

FieldElement collapse_power_sum(const FieldContext& ctx, std::vector<std::uint64_t> exponents)
{
    for (auto& e : exponents)
        e %= ctx.order();
    std::sort(exponents.begin(), exponents.end());

    FieldElement acc = FieldElement::zero();
    std::size_t i = 0;
    while (i < exponents.size()) {
        std::size_t j = i;
        while (j < exponents.size() && exponents[j] == exponents[i])
            ++j;
        if ((j - i) % 2 != 0)
            acc = ctx.add(acc, FieldElement::power(exponents[i]));
        i = j;
    }
    return acc;
}

Gf2Poly coset_min_poly(const Gf2Poly& c2, std::uint64_t e)
{
    if (!is_primitive(c2))
        throw std::invalid_argument("coset base polynomial must be primitive");
    std::size_t m = static_cast<std::size_t>(c2.degree());
    if (m > 32)
        throw std::invalid_argument("coset base degree above supported bound");
    std::uint64_t order = (std::uint64_t{1} << m) - 1;
    e %= order;
    if (e == 0) {
        // lambda^0 = 1 has minimal polynomial x + 1
        Gf2Poly p = Gf2Poly::monomial(1);
        p.set_coeff(0, true);
        return p;
    }

    std::uint64_t mod_bits = 0;
    for (std::size_t k : c2.exponents())
        mod_bits |= std::uint64_t{1} << k;

    auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
        std::uint64_t r = 0;
        while (b) {
            if (b & 1)
                r ^= a;
            b >>= 1;
            a <<= 1;
            if ((a >> m) & 1)
                a ^= mod_bits;
        }
        return r;
    };

    std::uint64_t lam_e = 1;
    {
        std::uint64_t base = 2, k = e;
        while (k) {
            if (k & 1)
                lam_e = mulmod(lam_e, base);
            base = mulmod(base, base);
            k >>= 1;
        }
    }

    // Product of (x + root) over the cyclotomic coset {e, 2e, 4e, ...}.
    std::vector<std::uint64_t> coeffs{1}; // field-valued, ascending degree
    std::uint64_t root = lam_e;
    do {
        coeffs.push_back(0);
        for (std::size_t k = coeffs.size() - 1; k > 0; --k)
            coeffs[k] = coeffs[k - 1] ^ mulmod(root, coeffs[k]);
        coeffs[0] = mulmod(root, coeffs[0]);
        root = mulmod(root, root);
    } while (root != lam_e);

    Gf2Poly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] > 1)
            throw std::logic_error("coset polynomial has a coefficient outside GF(2)");
        if (coeffs[k] == 1)
            out.set_coeff(k, true);
    }
    return out;
}

} // namespace sgca
