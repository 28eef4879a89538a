#include "sgca/lfsr.hpp"

#include <stdexcept>

namespace sgca {

LfsrSpec LfsrSpec::make(const Gf2Poly& charpoly, bool require_primitive)
{
    int deg = charpoly.degree();
    if (deg < 1)
        throw std::invalid_argument("LFSR characteristic polynomial needs degree >= 1");
    if (require_primitive && !is_primitive(charpoly))
        throw std::invalid_argument("LFSR characteristic polynomial is not primitive: " + charpoly.str());

    LfsrSpec spec;
    spec.length = static_cast<std::size_t>(deg);
    spec.charpoly = charpoly;
    for (std::size_t e : charpoly.exponents())
        if (e < spec.length)
            spec.taps.push_back(e);
    return spec;
}

std::uint8_t lfsr_next(const LfsrSpec& spec, LfsrState& state)
{
    if (state.stages.size() != spec.length)
        throw std::invalid_argument("LFSR state length mismatch");
    std::uint8_t out = state.stages[0];
    std::uint8_t fb = 0;
    for (std::size_t i : spec.taps)
        fb ^= state.stages[i];
    for (std::size_t i = 0; i + 1 < spec.length; ++i)
        state.stages[i] = state.stages[i + 1];
    state.stages[spec.length - 1] = fb;
    return out;
}

Bits lfsr_stream(const LfsrSpec& spec, LfsrState state, std::size_t n)
{
    Bits out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(lfsr_next(spec, state));
    return out;
}

Bits decimate_fixed(const Bits& seq, std::size_t start, std::size_t step)
{
    if (step == 0)
        throw std::invalid_argument("decimation step must be >= 1");
    Bits out;
    for (std::size_t i = start; i < seq.size(); i += step)
        out.push_back(seq[i]);
    return out;
}

Bits decimate_fixed_cyclic(const Bits& seq, std::size_t start, std::size_t step, std::size_t count)
{
    if (step == 0)
        throw std::invalid_argument("decimation step must be >= 1");
    if (seq.empty())
        throw std::invalid_argument("cannot cyclically decimate an empty sequence");
    Bits out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j)
        out.push_back(seq[(start + j * step) % seq.size()]);
    return out;
}

} // namespace sgca
