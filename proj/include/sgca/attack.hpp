#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sgca/bits.hpp"
#include "sgca/gf2field.hpp"
#include "sgca/linearize.hpp"

namespace sgca {

// One sub-sequence of a chained sub-triangle. The value at time shift t
// equals the XOR of the keystream bits indexed by indices[]+timeshift+t;
// the indices are the exponents of (P_{cell-1})^depth.
struct TriangleExpression {
    std::size_t cell = 0;  // 1-based, >= 2
    std::size_t depth = 0; // >= 1
    std::vector<std::uint64_t> indices;
    std::uint64_t timeshift = 0;
    Bits values; // concrete values at successive time shifts
};

// All per-cell chains derivable from a contiguous intercepted window.
// max_depth == 0 selects the default of |intercepted| / 2.
std::vector<TriangleExpression> chained_subtriangles(const Bits& intercepted, const RuleVector& rules,
                                                     std::size_t max_depth = 0);

// Folds an expression whose indices share one residue class mod
// 2^(l1-1) into concrete keystream bits at new positions. Returns an
// empty list when the expression does not collapse (mixed residues,
// fewer than two indices, or cancellation to the zero element). The
// default mode accepts residue 0 only.
std::vector<std::pair<std::uint64_t, std::uint8_t>> collapse_and_place(const TriangleExpression& expr,
                                                                       const FieldContext& ctx,
                                                                       std::size_t l1,
                                                                       bool any_residue = false);

// Number of new bits derivable from n known bits per column:
// sum over columns of sum_{k=2..N} C(N, k).
std::uint64_t count_reconstructible(const std::vector<std::uint64_t>& n_per_column);

// Row of column C_1 holding b_i: the solution j of
// j * (2^l1 - 1) == i (mod 2^l2 - 1).
std::uint64_t b_position(std::size_t l1, std::size_t l2, std::uint64_t i);
std::vector<std::uint64_t> b_positions(std::size_t l1, std::size_t l2); // j_1 .. j_{l2-1}

enum class BitOrigin : std::uint8_t { intercepted, reconstructed };

// Position-indexed known keystream bits within one period.
class KnownBitTable {
public:
    struct Entry {
        std::uint8_t bit;
        BitOrigin origin;
    };

    explicit KnownBitTable(std::uint64_t period);

    std::uint64_t period() const noexcept { return period_; }
    std::size_t size() const noexcept { return entries_.size(); }

    // Returns false on a conflicting duplicate. Positions wrap mod period.
    bool insert(std::uint64_t position, std::uint8_t bit, BitOrigin origin);
    std::optional<std::uint8_t> at(std::uint64_t position) const;
    const std::map<std::uint64_t, Entry>& entries() const noexcept { return entries_; }

private:
    std::uint64_t period_;
    std::map<std::uint64_t, Entry> entries_;
};

struct Phase1Options {
    std::size_t max_depth = 0; // 0 = |intercepted| / 2
    bool any_residue = false;
};

struct Phase1Result {
    std::vector<std::pair<std::uint64_t, std::uint8_t>> reconstructed; // newly placed, sorted
    bool consistent = true; // false if an emission conflicted with a known bit
};

// Phase 1: runs both model automata over the intercepted window and
// merges every collapsible expression into the table. Works for any
// linear model (shrinking generator or CCSG).
Phase1Result phase1_reconstruct(const Bits& intercepted, const LinearModel& model, const FieldContext& ctx,
                                KnownBitTable& table, const Phase1Options& options = {});

struct RecoveredKey {
    LfsrState is1;
    LfsrState is2;
    std::uint64_t nodes_visited = 0;
};

enum class AttackStatus : std::uint8_t {
    found,             // unique consistent key
    no_consistent_key, // every branch contradicted (corrupt input)
    ambiguous,         // multiple surviving keys (insufficient data)
};

struct SearchEvent {
    enum class Kind : std::uint8_t {
        placement_rejected, // a 1-placement contradicted a known bit
        is1_examined,       // a complete IS1 assignment was reached
        survivor,           // a full structure passed every check
    };
    Kind kind;
    Bits prefix; // decided sequence bits a_0..a_t at the event
};

struct SearchResult {
    AttackStatus status = AttackStatus::no_consistent_key;
    RecoveredKey key;                    // valid when status == found
    Bits keystream;                      // one full period, valid when status == found
    std::vector<RecoveredKey> survivors; // every fully determined surviving key
    bool underdetermined = false;        // some survivor left IS2 bits open
    std::uint64_t nodes_visited = 0;
};

// Phase 2: depth-first hypothesis search over the SR1 sequence bits.
// Placing the k-th 1 at index t asserts that matrix column k+1 starts at
// row t * inv(2^l1 - 1) of column 1; contradictions against known bits
// prune the subtree. ctx must be the field of the model base polynomial
// (degree l2). Node count = complete IS1 assignments examined.
//
// When the control polynomial c1 is supplied (the usual setting: only
// the states are secret), sequence bits beyond IS1 are forced by its
// recurrence and merely checked. Without it they are hypothesized too,
// which needs more known bits to stay unambiguous.
SearchResult hypothesis_search(const KnownBitTable& known, std::size_t l1, std::size_t l2,
                               const FieldContext& ctx, std::vector<SearchEvent>* trace = nullptr,
                               const Gf2Poly* c1 = nullptr);

struct AttackOptions {
    Phase1Options phase1;
    std::vector<std::pair<std::uint64_t, std::uint8_t>> extra_known; // merged before phase 2
    std::optional<Gf2Poly> c1; // control polynomial, when known
};

struct AttackResult {
    AttackStatus status = AttackStatus::no_consistent_key;
    RecoveredKey key;
    Bits keystream; // one full period when found
    std::vector<RecoveredKey> survivors;
    std::vector<std::pair<std::uint64_t, std::uint8_t>> reconstructed;
    std::uint64_t nodes_visited = 0;
};

// The full two-phase attack against a shrinking generator, given the
// intercepted prefix of the keystream and the public parameters l1 and
// C2. The intercepted window is taken to start at the keystream origin;
// any contiguous window qualifies, with the recovered states being the
// register states at the window start.
AttackResult attack_shrinking(const Bits& intercepted, std::size_t l1, std::size_t l2, const Gf2Poly& c2,
                              const AttackOptions& options = {}, std::vector<SearchEvent>* trace = nullptr);

} // namespace sgca
