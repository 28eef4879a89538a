#include "doctest.h"

#include <stdexcept>

#include <numeric>
#include <set>

#include "sgca/gf2poly.hpp"
#include "sgca/lfsr.hpp"

using namespace sgca;

namespace {

Gf2Poly P(const char* text)
{
    return Gf2Poly::parse(text);
}

std::size_t least_period(const Bits& seq)
{
    // seq holds at least two copies of the candidate period
    for (std::size_t p = 1; p <= seq.size() / 2; ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < seq.size(); ++i)
            if (seq[i] != seq[i + p]) {
                ok = false;
                break;
            }
        if (ok)
            return p;
    }
    return seq.size();
}

} // namespace

TEST_CASE("reference registers")
{
    LfsrSpec sr1 = LfsrSpec::make(P("1+x^2+x^3"));
    CHECK(lfsr_stream(sr1, LfsrState{{1, 0, 0}}, 7) == Bits{1, 0, 0, 1, 1, 1, 0});

    LfsrSpec sr2 = LfsrSpec::make(P("1+x+x^4"));
    CHECK(lfsr_stream(sr2, LfsrState{{1, 0, 0, 0}}, 15) ==
          Bits{1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1});

    // periodicity over two rounds
    CHECK(lfsr_stream(sr1, LfsrState{{1, 0, 0}}, 14) ==
          Bits{1, 0, 0, 1, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0});
    Bits two = lfsr_stream(sr2, LfsrState{{1, 0, 0, 0}}, 30);
    for (std::size_t i = 0; i < 15; ++i)
        CHECK(two[i] == two[i + 15]);

    CHECK(lfsr_stream(sr1, LfsrState{{1, 0, 0}}, 0).empty());
}

TEST_CASE("degenerate and invalid states")
{
    LfsrSpec spec = LfsrSpec::make(P("1+x^2+x^3"));
    LfsrState zero{{0, 0, 0}};
    CHECK(zero.is_zero());
    CHECK(lfsr_stream(spec, zero, 10) == Bits(10, 0));

    LfsrState bad{{1, 0}};
    CHECK_THROWS_AS(lfsr_next(spec, bad), std::invalid_argument);
    CHECK_THROWS_AS(LfsrSpec::make(P("x^2+1")), std::invalid_argument);
    // escape hatch for non-primitive experiments
    CHECK(LfsrSpec::make(P("x^2+1"), false).length == 2);
}

TEST_CASE("maximum-length properties")
{
    for (const char* poly : {"1+x+x^2", "1+x+x^3", "1+x+x^4", "1+x^2+x^5", "1+x+x^6",
                             "1+x^3+x^7", "1+x^2+x^3+x^4+x^8", "1+x^4+x^9", "1+x^3+x^10",
                             "1+x^2+x^11", "1+x+x^4+x^6+x^12"}) {
        LfsrSpec spec = LfsrSpec::make(P(poly));
        std::size_t l = spec.length;
        std::size_t period = (std::size_t{1} << l) - 1;

        LfsrState state{Bits(l, 0)};
        state.stages[0] = 1;
        std::set<Bits> states;
        std::size_t ones = 0;
        for (std::size_t i = 0; i < period; ++i) {
            states.insert(state.stages);
            ones += lfsr_next(spec, state);
        }
        CHECK(states.size() == period);       // visits every nonzero state
        CHECK(ones == (period + 1) / 2);      // balanced up to one extra 1
        Bits two = lfsr_stream(spec, LfsrState{[&] {
                                   Bits b(l, 0);
                                   b[0] = 1;
                                   return b;
                               }()},
                               2 * period);
        CHECK(least_period(two) == period);
    }
}

TEST_CASE("decimation")
{
    LfsrSpec spec = LfsrSpec::make(P("1+x+x^2+x^4+x^5"));
    LfsrState seed{{1, 0, 0, 0, 0}};
    Bits pn = lfsr_stream(spec, seed, 31);

    SUBCASE("step 1 is the identity")
    {
        CHECK(decimate_fixed(pn, 0, 1) == pn);
        CHECK(decimate_fixed_cyclic(pn, 0, 1, 31) == pn);
    }

    SUBCASE("step equal to the period is constant")
    {
        LfsrSpec sr2 = LfsrSpec::make(P("1+x+x^4"));
        Bits seq = lfsr_stream(sr2, LfsrState{{1, 0, 0, 0}}, 15);
        Bits dec = decimate_fixed_cyclic(seq, 0, 15, 10);
        CHECK(dec == Bits(10, seq[0]));
    }

    SUBCASE("decimating by 7 lands in the expected coset")
    {
        Bits dec = decimate_fixed_cyclic(pn, 0, 7, 62);
        auto bm = berlekamp_massey(dec);
        CHECK(bm.char_poly == P("1+x^2+x^5"));
    }

    SUBCASE("coprime steps preserve the least period")
    {
        for (std::size_t step : {2u, 3u, 7u, 11u, 29u}) {
            Bits dec = decimate_fixed_cyclic(pn, 0, step, 62);
            CHECK(std::gcd(step, std::size_t{31}) == 1);
            CHECK(least_period(dec) == 31);
        }
    }

    SUBCASE("bad arguments")
    {
        CHECK_THROWS_AS(decimate_fixed(pn, 0, 0), std::invalid_argument);
        CHECK_THROWS_AS(decimate_fixed_cyclic(Bits{}, 0, 1, 3), std::invalid_argument);
    }
}
