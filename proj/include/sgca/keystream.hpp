#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sgca/bits.hpp"
#include "sgca/lfsr.hpp"

namespace sgca {

// Shrinking generator: SR1 selects which SR2 output bits survive.
struct ShrinkGenSpec {
    LfsrSpec sr1;
    LfsrSpec sr2;
    LfsrState seed1;
    LfsrState seed2;

    static ShrinkGenSpec make(const LfsrSpec& sr1, const LfsrState& seed1,
                              const LfsrSpec& sr2, const LfsrState& seed2);
};

// Clock-controlled shrinking generator. Empty taps means the decimation
// function is identically 1, i.e. the plain shrinking generator.
struct CcsgSpec {
    ShrinkGenSpec base;
    std::vector<std::size_t> taps; // distinct SR1 stage indices

    static CcsgSpec make(const ShrinkGenSpec& base, std::vector<std::size_t> taps);
};

Bits sg_stream(const ShrinkGenSpec& spec, std::size_t n);

// Decimation amount for the current SR1 state:
// X = 1 + sum_k 2^k * stage(tap_k).
unsigned xt_value(const CcsgSpec& spec, const LfsrState& sr1_state);

Bits ccsg_stream(const CcsgSpec& spec, std::size_t n);

// The intermediate sequence {b'}: SR2 output under the X-controlled
// clocking, before the selection rule is applied.
Bits ccsg_decimated(const CcsgSpec& spec, std::size_t n);

struct SgTheory {
    std::uint64_t period;
    std::uint64_t ones;
    std::uint64_t lc_min; // inclusive lower bound on linear complexity
    std::uint64_t lc_max; // inclusive upper bound
};

SgTheory sg_theory(std::size_t l1, std::size_t l2);

// The shrunken sequence laid out as a (2^l2 - 1) x 2^(l1-1) matrix with
// a known/unknown overlay. Flattened index = row * cols + col.
class ShrunkenMatrix {
public:
    ShrunkenMatrix(std::size_t l1, std::size_t l2);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint64_t period() const noexcept { return static_cast<std::uint64_t>(rows_) * cols_; }

    // Throws on a conflicting duplicate; inserting the same bit twice is fine.
    void insert(std::uint64_t position, std::uint8_t bit);

    std::optional<std::uint8_t> at(std::size_t row, std::size_t col) const;
    std::optional<std::uint8_t> at_position(std::uint64_t position) const;
    std::size_t known_count() const noexcept { return known_; }

    // All known bits of one column, as (row, bit) pairs in row order.
    std::vector<std::pair<std::size_t, std::uint8_t>> column_known(std::size_t col) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t known_ = 0;
    std::vector<std::int8_t> cells_; // -1 = unknown
};

ShrunkenMatrix build_shrunken_matrix(std::span<const std::pair<std::uint64_t, std::uint8_t>> bits,
                                     std::size_t l1, std::size_t l2);

} // namespace sgca
