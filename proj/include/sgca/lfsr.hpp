#pragma once

#include <cstdint>
#include <vector>

#include "sgca/bits.hpp"
#include "sgca/gf2poly.hpp"

namespace sgca {

// Fibonacci-configuration LFSR. Stage 0 is the output stage; the
// feedback into stage L-1 is s_{t+L} = sum of s_{t+i} over the set
// coefficient indices i < L of the characteristic polynomial.
struct LfsrSpec {
    std::size_t length = 0;
    Gf2Poly charpoly;
    std::vector<std::size_t> taps; // coefficient indices below length

    // require_primitive is the default; disabling it drops the period
    // guarantee but keeps the step semantics (useful for experiments).
    static LfsrSpec make(const Gf2Poly& charpoly, bool require_primitive = true);
};

struct LfsrState {
    Bits stages; // index 0 = output stage

    bool is_zero() const noexcept
    {
        for (auto b : stages)
            if (b)
                return false;
        return true;
    }
};

// Outputs stage 0 and advances the register one step.
std::uint8_t lfsr_next(const LfsrSpec& spec, LfsrState& state);

Bits lfsr_stream(const LfsrSpec& spec, LfsrState state, std::size_t n);

// out_j = seq[start + j*step], as long as indices stay in range.
Bits decimate_fixed(const Bits& seq, std::size_t start, std::size_t step);

// Cyclic variant for sequences understood as periodic with period seq.size().
Bits decimate_fixed_cyclic(const Bits& seq, std::size_t start, std::size_t step, std::size_t count);

} // namespace sgca
