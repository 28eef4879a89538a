#include "sgca/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace sgca {

namespace {

constexpr std::size_t kWordBits = 64;

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

} // namespace

Gf2Poly Gf2Poly::monomial(std::size_t k)
{
    Gf2Poly p;
    p.set_coeff(k, true);
    return p;
}

Gf2Poly Gf2Poly::from_exponents(const std::vector<std::size_t>& exps)
{
    Gf2Poly p;
    for (auto e : exps)
        p.set_coeff(e, !p.coeff(e)); // repeated exponents cancel over GF(2)
    return p;
}

int Gf2Poly::degree() const noexcept
{
    if (words_.empty())
        return -1;
    std::size_t top = words_.size() - 1;
    return static_cast<int>(top * kWordBits + std::bit_width(words_[top]) - 1);
}

bool Gf2Poly::coeff(std::size_t i) const noexcept
{
    std::size_t w = i / kWordBits;
    if (w >= words_.size())
        return false;
    return (words_[w] >> (i % kWordBits)) & 1u;
}

void Gf2Poly::set_coeff(std::size_t i, bool value)
{
    std::size_t w = i / kWordBits;
    if (value) {
        if (w >= words_.size())
            words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (i % kWordBits);
    } else if (w < words_.size()) {
        words_[w] &= ~(std::uint64_t{1} << (i % kWordBits));
        normalize();
    }
}

std::size_t Gf2Poly::term_count() const noexcept
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::size_t> Gf2Poly::exponents() const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            unsigned b = static_cast<unsigned>(std::countr_zero(word));
            out.push_back(w * kWordBits + b);
            word &= word - 1;
        }
    }
    return out;
}

void Gf2Poly::normalize()
{
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

void Gf2Poly::xor_shifted(const Gf2Poly& src, std::size_t shift)
{
    if (src.is_zero())
        return;
    std::size_t word_shift = shift / kWordBits;
    unsigned bit_shift = static_cast<unsigned>(shift % kWordBits);
    std::size_t needed = src.words_.size() + word_shift + 1;
    if (words_.size() < needed)
        words_.resize(needed, 0);
    for (std::size_t i = 0; i < src.words_.size(); ++i) {
        std::uint64_t w = src.words_[i];
        words_[i + word_shift] ^= w << bit_shift;
        if (bit_shift != 0)
            words_[i + word_shift + 1] ^= w >> (kWordBits - bit_shift);
    }
    normalize();
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& rhs)
{
    if (words_.size() < rhs.words_.size())
        words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i)
        words_[i] ^= rhs.words_[i];
    normalize();
    return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b)
{
    Gf2Poly out;
    if (a.is_zero() || b.is_zero())
        return out;
    const Gf2Poly& scan = a.term_count() <= b.term_count() ? a : b;
    const Gf2Poly& other = &scan == &a ? b : a;
    for (std::size_t e : scan.exponents())
        out.xor_shifted(other, e);
    return out;
}

Gf2Poly Gf2Poly::shifted_up(std::size_t k) const
{
    Gf2Poly out;
    out.xor_shifted(*this, k);
    return out;
}

Gf2DivMod gf2_divmod(const Gf2Poly& num, const Gf2Poly& den)
{
    if (den.is_zero())
        throw std::invalid_argument("polynomial division by zero");
    Gf2DivMod result;
    result.remainder = num;
    int dd = den.degree();
    while (result.remainder.degree() >= dd) {
        std::size_t shift = static_cast<std::size_t>(result.remainder.degree() - dd);
        result.remainder.xor_shifted(den, shift);
        result.quotient.set_coeff(shift, true);
    }
    return result;
}

Gf2Poly Gf2Poly::mod(const Gf2Poly& den) const
{
    return gf2_divmod(*this, den).remainder;
}

bool Gf2Poly::divides(const Gf2Poly& multiple) const
{
    return gf2_divmod(multiple, *this).remainder.is_zero();
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b)
{
    while (!b.is_zero()) {
        Gf2Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Gf2Poly Gf2Poly::square() const
{
    Gf2Poly out;
    for (std::size_t e : exponents())
        out.set_coeff(2 * e, true);
    return out;
}

Gf2Poly Gf2Poly::pow(std::uint64_t n) const
{
    Gf2Poly result = one();
    Gf2Poly base = *this;
    while (n) {
        if (n & 1)
            result = result * base;
        base = base.square();
        n >>= 1;
    }
    return result;
}

Gf2Poly Gf2Poly::mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m)
{
    return (a * b).mod(m);
}

Gf2Poly Gf2Poly::powmod(const Gf2Poly& base, std::uint64_t n, const Gf2Poly& m)
{
    Gf2Poly result = one().mod(m);
    Gf2Poly acc = base.mod(m);
    while (n) {
        if (n & 1)
            result = mulmod(result, acc, m);
        acc = mulmod(acc, acc, m);
        n >>= 1;
    }
    return result;
}

Gf2Poly Gf2Poly::reversed(std::size_t span_degree) const
{
    if (degree() > static_cast<int>(span_degree))
        throw std::invalid_argument("reversal span below polynomial degree");
    Gf2Poly out;
    for (std::size_t e : exponents())
        out.set_coeff(span_degree - e, true);
    return out;
}

Gf2Poly Gf2Poly::parse(std::string_view text)
{
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact.push_back(c);
    if (compact.empty())
        throw std::invalid_argument("empty polynomial text");

    bool bitstring = true;
    for (char c : compact)
        if (c != '0' && c != '1')
            bitstring = false;

    Gf2Poly p;
    if (bitstring) {
        for (std::size_t i = 0; i < compact.size(); ++i)
            if (compact[i] == '1')
                p.set_coeff(i, true);
        return p;
    }

    std::size_t start = 0;
    while (start <= compact.size()) {
        std::size_t plus = compact.find('+', start);
        std::string term = compact.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        start = plus == std::string::npos ? compact.size() + 1 : plus + 1;

        std::size_t e;
        if (term == "1")
            e = 0;
        else if (term == "x")
            e = 1;
        else if (term.size() > 2 && term[0] == 'x' && term[1] == '^')
            e = std::stoull(term.substr(2));
        else
            throw std::invalid_argument("bad polynomial term: \"" + term + "\"");
        p.set_coeff(e, !p.coeff(e));
    }
    return p;
}

std::string Gf2Poly::str() const
{
    if (is_zero())
        return "0";
    std::string s;
    for (std::size_t e : exponents()) {
        if (!s.empty())
            s += '+';
        if (e == 0)
            s += '1';
        else if (e == 1)
            s += 'x';
        else
            s += "x^" + std::to_string(e);
    }
    return s;
}

bool is_irreducible(const Gf2Poly& p)
{
    int deg = p.degree();
    if (deg <= 0)
        return false;
    if (deg == 1)
        return true;

    std::size_t m = static_cast<std::size_t>(deg);
    const Gf2Poly x = Gf2Poly::monomial(1);

    // Rabin's test: x^(2^m) == x mod p and gcd(x^(2^(m/q)) - x, p) = 1
    // for every prime divisor q of m.
    auto primes = distinct_prime_factors(m);
    Gf2Poly power = x.mod(p);
    std::size_t steps = 0;
    std::vector<std::size_t> checkpoints;
    for (auto q : primes)
        checkpoints.push_back(m / static_cast<std::size_t>(q));
    std::sort(checkpoints.begin(), checkpoints.end());

    std::size_t next = 0;
    while (steps < m) {
        power = Gf2Poly::mulmod(power, power, p);
        ++steps;
        while (next < checkpoints.size() && checkpoints[next] == steps) {
            Gf2Poly g = Gf2Poly::gcd(power + x, p);
            if (g != Gf2Poly::one())
                return false;
            ++next;
        }
    }
    return power == x.mod(p);
}

bool is_primitive(const Gf2Poly& p, std::size_t max_degree)
{
    int deg = p.degree();
    if (deg <= 0)
        throw std::invalid_argument("primitivity requires degree >= 1");
    if (static_cast<std::size_t>(deg) > max_degree)
        throw std::invalid_argument("degree above primitivity test cap");
    if (!p.coeff(0))
        return false; // divisible by x
    if (!is_irreducible(p))
        return false;

    std::size_t m = static_cast<std::size_t>(deg);
    std::uint64_t order = (m == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    const Gf2Poly x = Gf2Poly::monomial(1);
    for (auto f : distinct_prime_factors(order)) {
        if (Gf2Poly::powmod(x, order / f, p) == Gf2Poly::one())
            return false;
    }
    return true;
}

BmResult berlekamp_massey(const Bits& seq)
{
    // Connection polynomial form: s_n = sum_{i=1..L} c_i s_{n-i}.
    Gf2Poly c = Gf2Poly::one();
    Gf2Poly b = Gf2Poly::one();
    std::size_t l = 0;
    std::size_t m = 1;

    for (std::size_t n = 0; n < seq.size(); ++n) {
        std::uint8_t d = seq[n];
        for (std::size_t i = 1; i <= l; ++i)
            if (c.coeff(i) && seq[n - i])
                d ^= 1;
        if (d == 0) {
            ++m;
        } else if (2 * l <= n) {
            Gf2Poly t = c;
            c += b.shifted_up(m);
            l = n + 1 - l;
            b = std::move(t);
            m = 1;
        } else {
            c += b.shifted_up(m);
            ++m;
        }
    }

    // Characteristic form: reverse the connection polynomial across the
    // full length L so that sum_{i=0..L} p_i s_{t+i} = 0.
    return BmResult{l, c.reversed(l)};
}

} // namespace sgca
