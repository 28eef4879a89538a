#include "sgca/keystream.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sgca {

ShrinkGenSpec ShrinkGenSpec::make(const LfsrSpec& sr1, const LfsrState& seed1,
                                  const LfsrSpec& sr2, const LfsrState& seed2)
{
    if (std::gcd(sr1.length, sr2.length) != 1)
        throw std::invalid_argument("register lengths must be coprime");
    if (sr1.length >= sr2.length)
        throw std::invalid_argument("control register must be the shorter one");
    if (seed1.stages.size() != sr1.length || seed2.stages.size() != sr2.length)
        throw std::invalid_argument("seed length mismatch");
    if (seed1.is_zero() || seed2.is_zero())
        throw std::invalid_argument("all-zero seeds are degenerate");
    return ShrinkGenSpec{sr1, sr2, seed1, seed2};
}

CcsgSpec CcsgSpec::make(const ShrinkGenSpec& base, std::vector<std::size_t> taps)
{
    std::vector<std::size_t> sorted = taps;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("tap indices must be distinct");
    for (std::size_t t : sorted)
        if (t >= base.sr1.length)
            throw std::invalid_argument("tap index out of range");
    if (taps.size() > base.sr1.length - 1)
        throw std::invalid_argument("too many taps");
    return CcsgSpec{base, std::move(taps)};
}

Bits sg_stream(const ShrinkGenSpec& spec, std::size_t n)
{
    Bits out;
    out.reserve(n);
    LfsrState s1 = spec.seed1;
    LfsrState s2 = spec.seed2;
    while (out.size() < n) {
        std::uint8_t a = lfsr_next(spec.sr1, s1);
        std::uint8_t b = lfsr_next(spec.sr2, s2);
        if (a)
            out.push_back(b);
    }
    return out;
}

unsigned xt_value(const CcsgSpec& spec, const LfsrState& sr1_state)
{
    if (sr1_state.stages.size() != spec.base.sr1.length)
        throw std::invalid_argument("SR1 state length mismatch");
    unsigned x = 1;
    for (std::size_t k = 0; k < spec.taps.size(); ++k)
        x += static_cast<unsigned>(sr1_state.stages[spec.taps[k]]) << k;
    return x;
}

namespace {

// Common driver: at each time step SR2's current output bit is b', then
// SR2 is clocked X_t times and SR1 once.
template <typename Emit>
void ccsg_run(const CcsgSpec& spec, Emit&& emit)
{
    LfsrState s1 = spec.base.seed1;
    LfsrState s2 = spec.base.seed2;
    for (;;) {
        std::uint8_t bprime = s2.stages[0];
        std::uint8_t keep = s1.stages[0];
        unsigned x = xt_value(spec, s1);
        if (!emit(bprime, keep))
            return;
        for (unsigned i = 0; i < x; ++i)
            lfsr_next(spec.base.sr2, s2);
        lfsr_next(spec.base.sr1, s1);
    }
}

} // namespace

Bits ccsg_stream(const CcsgSpec& spec, std::size_t n)
{
    Bits out;
    out.reserve(n);
    ccsg_run(spec, [&](std::uint8_t bprime, std::uint8_t keep) {
        if (keep)
            out.push_back(bprime);
        return out.size() < n;
    });
    return out;
}

Bits ccsg_decimated(const CcsgSpec& spec, std::size_t n)
{
    Bits out;
    out.reserve(n);
    ccsg_run(spec, [&](std::uint8_t bprime, std::uint8_t) {
        out.push_back(bprime);
        return out.size() < n;
    });
    return out;
}

SgTheory sg_theory(std::size_t l1, std::size_t l2)
{
    if (l1 < 1 || l1 >= l2 || std::gcd(l1, l2) != 1)
        throw std::invalid_argument("need coprime lengths with l1 < l2");
    if (l1 + l2 > 62)
        throw std::invalid_argument("lengths too large for exact accounting");
    SgTheory t;
    t.period = ((std::uint64_t{1} << l2) - 1) << (l1 - 1);
    t.ones = std::uint64_t{1} << (l2 - 1 + l1 - 1);
    // strict lower bound l2 * 2^(l1-2) turned into an inclusive one
    t.lc_min = (static_cast<std::uint64_t>(l2) << l1) / 4 + 1;
    t.lc_max = static_cast<std::uint64_t>(l2) << (l1 - 1);
    return t;
}

ShrunkenMatrix::ShrunkenMatrix(std::size_t l1, std::size_t l2)
{
    // dense overlay: one cell per keystream position of the period
    if (l1 < 1 || l1 >= l2 || l1 + l2 > 26)
        throw std::invalid_argument("unsupported matrix dimensions");
    rows_ = (std::size_t{1} << l2) - 1;
    cols_ = std::size_t{1} << (l1 - 1);
    cells_.assign(rows_ * cols_, -1);
}

void ShrunkenMatrix::insert(std::uint64_t position, std::uint8_t bit)
{
    if (position >= period())
        throw std::invalid_argument("keystream position beyond one period");
    std::int8_t& cell = cells_[position];
    if (cell == -1) {
        cell = static_cast<std::int8_t>(bit);
        ++known_;
    } else if (cell != static_cast<std::int8_t>(bit)) {
        throw std::invalid_argument("conflicting bit at position " + std::to_string(position));
    }
}

std::optional<std::uint8_t> ShrunkenMatrix::at(std::size_t row, std::size_t col) const
{
    return at_position(static_cast<std::uint64_t>(row) * cols_ + col);
}

std::optional<std::uint8_t> ShrunkenMatrix::at_position(std::uint64_t position) const
{
    if (position >= period())
        throw std::invalid_argument("keystream position beyond one period");
    std::int8_t cell = cells_[position];
    if (cell < 0)
        return std::nullopt;
    return static_cast<std::uint8_t>(cell);
}

std::vector<std::pair<std::size_t, std::uint8_t>> ShrunkenMatrix::column_known(std::size_t col) const
{
    if (col >= cols_)
        throw std::invalid_argument("column index out of range");
    std::vector<std::pair<std::size_t, std::uint8_t>> out;
    for (std::size_t row = 0; row < rows_; ++row) {
        std::int8_t cell = cells_[row * cols_ + col];
        if (cell >= 0)
            out.emplace_back(row, static_cast<std::uint8_t>(cell));
    }
    return out;
}

ShrunkenMatrix build_shrunken_matrix(std::span<const std::pair<std::uint64_t, std::uint8_t>> bits,
                                     std::size_t l1, std::size_t l2)
{
    ShrunkenMatrix m(l1, l2);
    for (const auto& [position, bit] : bits)
        m.insert(position, bit);
    return m;
}

} // namespace sgca
