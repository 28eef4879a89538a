#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgca/ca90150.hpp"
#include "sgca/gf2poly.hpp"
#include "sgca/lfsr.hpp"

namespace sgca {

// The two reversal rule vectors realizing an irreducible polynomial.
struct SynthesisPair {
    RuleVector first;  // lexicographically smaller of the two
    RuleVector second; // reverse of first
};

// Finds the 90/150 rule vectors whose characteristic polynomial is p.
// Exhaustive prefix search; degrees up to 24 are supported.
SynthesisPair synthesize_ca_pair(const Gf2Poly& p);

// Complements the rightmost rule and appends the mirror image; squares
// the characteristic polynomial for vectors produced by synthesis or a
// previous doubling.
RuleVector concat_double(const RuleVector& rules);

// Pair of CA of length deg(c2) * 2^(l1-1) generating the keystream of
// the corresponding generator family.
struct LinearModel {
    RuleVector ca1; // built from the lexicographically smaller base vector
    RuleVector ca2;
    Gf2Poly basepoly;       // P, with model char poly = P^(2^(l1-1))
    std::uint64_t exponent; // decimation distance (E for SG, D for CCSG)
    std::size_t l1;
    Gf2Poly c2;

    bool operator==(const LinearModel&) const = default;
};

LinearModel linearize_shrinking(std::size_t l1, const Gf2Poly& c2);

// The CCSG variant: the decimation distance is the sum of X_t over one
// SR1 period, reduced mod 2^l2 - 1. c1/seed1 are only needed to drive
// X_t; empty taps reduce to the plain shrinking generator model.
LinearModel linearize_ccsg(std::size_t l1, const Gf2Poly& c2, const std::vector<std::size_t>& taps,
                           const Gf2Poly& c1, const LfsrState& seed1);

// Hex encoding of a rule vector: cells left-to-right, most significant
// bit first within each 4-bit group. Length must be a multiple of 4.
std::string rule_vector_hex(const RuleVector& rules);
RuleVector rule_vector_from_hex(std::string_view hex);

// Plain-text key-value block. Rule vectors are emitted in hex when the
// length is divisible by 4, else in binary.
std::string format_model(const LinearModel& model);
LinearModel parse_model(std::string_view block);

} // namespace sgca
