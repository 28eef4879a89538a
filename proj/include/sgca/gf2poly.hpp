#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgca/bits.hpp"

namespace sgca {

class Gf2Poly;
struct Gf2DivMod;
Gf2DivMod gf2_divmod(const Gf2Poly& num, const Gf2Poly& den);

// Polynomial over GF(2). Coefficients are stored little-endian:
// bit i of words_[i / 64] is the coefficient of x^i.
// The zero polynomial has no words and degree() == -1.
class Gf2Poly {
public:
    Gf2Poly() = default;

    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly monomial(std::size_t k);
    static Gf2Poly from_exponents(const std::vector<std::size_t>& exps);

    // Accepts either term notation ("1+x^2+x^3", order-insensitive,
    // whitespace ignored) or an ascending coefficient bit string
    // ("1011" = 1+x^2+x^3).
    static Gf2Poly parse(std::string_view text);

    bool is_zero() const noexcept { return words_.empty(); }
    int degree() const noexcept;
    bool coeff(std::size_t i) const noexcept;
    void set_coeff(std::size_t i, bool value);
    std::size_t term_count() const noexcept;
    std::vector<std::size_t> exponents() const;

    bool operator==(const Gf2Poly&) const = default;

    Gf2Poly& operator+=(const Gf2Poly& rhs);
    friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b)
    {
        a += b;
        return a;
    }
    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);

    Gf2Poly shifted_up(std::size_t k) const; // multiply by x^k

    Gf2Poly mod(const Gf2Poly& den) const;
    bool divides(const Gf2Poly& multiple) const;

    static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

    Gf2Poly square() const;
    Gf2Poly pow(std::uint64_t n) const;
    static Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m);
    static Gf2Poly powmod(const Gf2Poly& base, std::uint64_t n, const Gf2Poly& m);

    // Coefficient reversal within degrees 0..span_degree, i.e. the
    // reciprocal polynomial x^span_degree * p(1/x).
    Gf2Poly reversed(std::size_t span_degree) const;

    std::string str() const;

private:
    friend Gf2DivMod gf2_divmod(const Gf2Poly& num, const Gf2Poly& den);

    void normalize();
    void xor_shifted(const Gf2Poly& src, std::size_t shift);

    std::vector<std::uint64_t> words_;
};

struct Gf2DivMod {
    Gf2Poly quotient;
    Gf2Poly remainder;
};

bool is_irreducible(const Gf2Poly& p);

// Primitivity over GF(2): irreducible and a root generates the full
// multiplicative group of order 2^deg - 1. Degrees above max_degree are
// rejected because the test factors 2^deg - 1.
bool is_primitive(const Gf2Poly& p, std::size_t max_degree = 32);

struct BmResult {
    std::size_t linear_complexity;
    Gf2Poly char_poly; // minimal characteristic polynomial of the recurrence
};

// Berlekamp-Massey over GF(2). The returned polynomial P of degree LC
// satisfies sum_{i=0..LC} p_i * s_{t+i} = 0 for every window of seq.
BmResult berlekamp_massey(const Bits& seq);

} // namespace sgca
