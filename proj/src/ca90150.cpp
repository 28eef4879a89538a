#include "sgca/ca90150.hpp"

#include <map>
#include <stdexcept>

namespace sgca {

RuleVector RuleVector::from_string(std::string_view text)
{
    RuleVector rv;
    rv.rules = parse_bits(text);
    if (rv.rules.empty())
        throw std::invalid_argument("empty rule vector");
    return rv;
}

std::string RuleVector::str() const
{
    return format_bits(rules);
}

RuleVector reversed(const RuleVector& rv)
{
    RuleVector out = rv;
    std::reverse(out.rules.begin(), out.rules.end());
    return out;
}

CaState ca_step(const RuleVector& rules, const CaState& state)
{
    std::size_t l = rules.size();
    if (state.cells.size() != l)
        throw std::invalid_argument("CA state length mismatch");
    CaState next;
    next.cells.resize(l);
    for (std::size_t i = 0; i < l; ++i) {
        std::uint8_t v = rules.rules[i] & state.cells[i];
        if (i > 0)
            v ^= state.cells[i - 1];
        if (i + 1 < l)
            v ^= state.cells[i + 1];
        next.cells[i] = v;
    }
    return next;
}

Bits EvolutionTable::column(std::size_t cell) const
{
    Bits out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (cell >= row.size())
            throw std::invalid_argument("cell index out of range");
        out.push_back(row[cell]);
    }
    return out;
}

EvolutionTable ca_run(const RuleVector& rules, const CaState& start, std::size_t n)
{
    EvolutionTable table;
    table.rows.reserve(n + 1);
    CaState state = start;
    table.rows.push_back(state.cells);
    for (std::size_t t = 0; t < n; ++t) {
        state = ca_step(rules, state);
        table.rows.push_back(state.cells);
    }
    return table;
}

CycleRun ca_run_until_repeat(const RuleVector& rules, const CaState& start, std::size_t max_rows)
{
    CycleRun run;
    std::map<Bits, std::size_t> seen;
    CaState state = start;
    for (std::size_t t = 0; t < max_rows; ++t) {
        auto [it, fresh] = seen.emplace(state.cells, t);
        if (!fresh) {
            run.repeat_of = it->second;
            return run;
        }
        run.table.rows.push_back(state.cells);
        state = ca_step(rules, state);
    }
    return run;
}

Gf2Poly ca_char_poly(const RuleVector& rules)
{
    Gf2Poly prev; // P_{-1} = 0
    Gf2Poly cur = Gf2Poly::one();
    for (std::uint8_t r : rules.rules) {
        Gf2Poly next = cur.shifted_up(1);
        if (r)
            next += cur;
        next += prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Gf2Poly> sub_automaton_char_polys(const RuleVector& rules, std::size_t upto)
{
    if (upto > rules.size())
        throw std::invalid_argument("prefix length beyond rule vector");
    std::vector<Gf2Poly> out;
    out.reserve(upto);
    Gf2Poly prev;
    Gf2Poly cur = Gf2Poly::one();
    for (std::size_t i = 0; i < upto; ++i) {
        Gf2Poly next = cur.shifted_up(1);
        if (rules.rules[i])
            next += cur;
        next += prev;
        prev = std::move(cur);
        cur = next;
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<Bits> transition_matrix(const RuleVector& rules)
{
    std::size_t l = rules.size();
    std::vector<Bits> m(l, Bits(l, 0));
    for (std::size_t i = 0; i < l; ++i) {
        m[i][i] = rules.rules[i];
        if (i > 0)
            m[i][i - 1] = 1;
        if (i + 1 < l)
            m[i][i + 1] = 1;
    }
    return m;
}

CaState apply_matrix(const std::vector<Bits>& matrix, const CaState& state)
{
    std::size_t l = matrix.size();
    if (state.cells.size() != l)
        throw std::invalid_argument("matrix/state size mismatch");
    CaState out;
    out.cells.assign(l, 0);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            out.cells[i] ^= matrix[i][j] & state.cells[j];
    return out;
}

CaState state_from_leading_cell(const RuleVector& rules, const Bits& leading)
{
    std::size_t l = rules.size();
    if (leading.size() < l)
        throw std::invalid_argument("need at least as many leading bits as cells");

    // Successive columns via the inverted neighbour relation:
    // col_i[t] = col_{i-1}[t+1] + R_{i-1} col_{i-1}[t] + col_{i-2}[t].
    CaState state;
    state.cells.resize(l);
    Bits prev2;
    Bits prev(leading.begin(), leading.begin() + static_cast<std::ptrdiff_t>(l));
    state.cells[0] = prev[0];
    for (std::size_t i = 1; i < l; ++i) {
        Bits col(prev.size() - 1);
        for (std::size_t t = 0; t < col.size(); ++t) {
            std::uint8_t v = prev[t + 1] ^ (rules.rules[i - 1] & prev[t]);
            if (i >= 2)
                v ^= prev2[t];
            col[t] = v;
        }
        state.cells[i] = col[0];
        prev2 = std::move(prev);
        prev = std::move(col);
    }
    return state;
}

} // namespace sgca
