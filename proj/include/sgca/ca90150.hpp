#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgca/bits.hpp"
#include "sgca/gf2poly.hpp"

namespace sgca {

// Rule assignment of a one-dimensional linear null hybrid cellular
// automaton: entry i-1 is 0 for rule 90 and 1 for rule 150 at cell i.
struct RuleVector {
    Bits rules;

    static RuleVector from_string(std::string_view text);
    std::size_t size() const noexcept { return rules.size(); }
    std::string str() const;

    bool operator==(const RuleVector&) const = default;
};

RuleVector reversed(const RuleVector& rv);

struct CaState {
    Bits cells;

    bool operator==(const CaState&) const = default;
};

// One synchronous update with null boundary cells:
// next_i = prev_{i-1} + R_i * prev_i + prev_{i+1}.
CaState ca_step(const RuleVector& rules, const CaState& state);

struct EvolutionTable {
    std::vector<Bits> rows; // rows[t] = state at time t

    Bits column(std::size_t cell) const; // cell is 0-based
};

// n steps; the table holds n+1 rows including the initial state.
EvolutionTable ca_run(const RuleVector& rules, const CaState& start, std::size_t n);

// Runs until a state repeats or max_rows rows have been produced.
// Returns the table plus the index the repeated state first appeared at
// (empty if the cap was hit first).
struct CycleRun {
    EvolutionTable table;
    std::optional<std::size_t> repeat_of;
};
CycleRun ca_run_until_repeat(const RuleVector& rules, const CaState& start, std::size_t max_rows);

// Characteristic polynomial of the transition matrix through the
// recurrence P_i = (x + R_i) P_{i-1} + P_{i-2}, P_{-1} = 0, P_0 = 1.
Gf2Poly ca_char_poly(const RuleVector& rules);

// [P_1 .. P_upto] for the prefix sub-automata.
std::vector<Gf2Poly> sub_automaton_char_polys(const RuleVector& rules, std::size_t upto);

// Tridiagonal transition matrix: rule vector on the main diagonal, ones
// above and below.
std::vector<Bits> transition_matrix(const RuleVector& rules);

CaState apply_matrix(const std::vector<Bits>& matrix, const CaState& state);

// Recovers the unique initial state whose cell-0 output starts with the
// given bits (needs at least size() of them).
CaState state_from_leading_cell(const RuleVector& rules, const Bits& leading);

} // namespace sgca
