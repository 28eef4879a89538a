#include "sgca/attack.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace sgca {

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1)
        throw std::invalid_argument("no modular inverse: arguments not coprime");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

// Derives the cell-index column from a leading column by `cell - 1`
// applications of the inverted neighbour relation.
Bits triangle_column(const RuleVector& rules, const Bits& col1, std::size_t cell)
{
    Bits prev2;
    Bits prev = col1;
    for (std::size_t j = 2; j <= cell; ++j) {
        if (prev.size() < 2)
            return {};
        Bits next(prev.size() - 1);
        std::uint8_t rule = rules.rules[j - 2]; // R_{j-1}
        for (std::size_t t = 0; t < next.size(); ++t) {
            std::uint8_t v = prev[t + 1] ^ (rule & prev[t]);
            if (j >= 3)
                v ^= prev2[t];
            next[t] = v;
        }
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

} // namespace

std::vector<TriangleExpression> chained_subtriangles(const Bits& intercepted, const RuleVector& rules,
                                                     std::size_t max_depth)
{
    std::size_t r = intercepted.size();
    if (r < 2)
        throw std::invalid_argument("need at least two intercepted bits");
    if (max_depth == 0)
        max_depth = r / 2;

    std::size_t max_cell = std::min(r, rules.size());
    std::vector<TriangleExpression> out;
    if (max_cell < 2)
        return out;

    auto prefix_polys = sub_automaton_char_polys(rules, max_cell - 1);
    for (std::size_t cell = 2; cell <= max_cell; ++cell) {
        const Gf2Poly& base = prefix_polys[cell - 2]; // P_{cell-1}
        Gf2Poly power = Gf2Poly::one();
        Bits chain = intercepted;
        for (std::size_t depth = 1; depth <= max_depth; ++depth) {
            power = power * base;
            chain = triangle_column(rules, chain, cell);
            if (chain.empty())
                break;
            TriangleExpression e;
            e.cell = cell;
            e.depth = depth;
            for (std::size_t exp : power.exponents())
                e.indices.push_back(exp);
            e.timeshift = 0;
            e.values = chain;
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint8_t>> collapse_and_place(const TriangleExpression& expr,
                                                                       const FieldContext& ctx,
                                                                       std::size_t l1,
                                                                       bool any_residue)
{
    std::vector<std::pair<std::uint64_t, std::uint8_t>> out;
    if (expr.indices.size() < 2 || expr.values.empty())
        return out;

    std::uint64_t d = std::uint64_t{1} << (l1 - 1);
    std::uint64_t residue = expr.indices.front() % d;
    for (std::uint64_t k : expr.indices)
        if (k % d != residue)
            return out; // mixed residues: not collapsible
    if (!any_residue && residue != 0)
        return out;

    std::vector<std::uint64_t> rows;
    rows.reserve(expr.indices.size());
    for (std::uint64_t k : expr.indices)
        rows.push_back(k / d);
    FieldElement fold = collapse_power_sum(ctx, rows);
    if (fold.is_zero())
        return out; // the sum cancels; nothing to place

    std::uint64_t period = ctx.order() * d;
    std::uint64_t origin = fold.exponent() * d + residue;
    for (std::size_t t = 0; t < expr.values.size(); ++t)
        out.emplace_back((origin + expr.timeshift + t) % period, expr.values[t]);
    return out;
}

std::uint64_t count_reconstructible(const std::vector<std::uint64_t>& n_per_column)
{
    std::uint64_t total = 0;
    for (std::uint64_t n : n_per_column) {
        if (n >= 63)
            throw std::invalid_argument("column count too large for exact accounting");
        if (n >= 2)
            total += (std::uint64_t{1} << n) - 1 - n; // sum_{k=2..n} C(n,k)
    }
    return total;
}

std::uint64_t b_position(std::size_t l1, std::size_t l2, std::uint64_t i)
{
    std::uint64_t t1 = (std::uint64_t{1} << l1) - 1;
    std::uint64_t tb = (std::uint64_t{1} << l2) - 1;
    std::uint64_t inv = mod_inverse(t1 % tb, tb);
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(i % tb) * inv % tb);
}

std::vector<std::uint64_t> b_positions(std::size_t l1, std::size_t l2)
{
    std::vector<std::uint64_t> out;
    out.reserve(l2 - 1);
    for (std::uint64_t i = 1; i < l2; ++i)
        out.push_back(b_position(l1, l2, i));
    return out;
}

KnownBitTable::KnownBitTable(std::uint64_t period)
    : period_(period)
{
    if (period == 0)
        throw std::invalid_argument("period must be positive");
}

bool KnownBitTable::insert(std::uint64_t position, std::uint8_t bit, BitOrigin origin)
{
    position %= period_;
    auto [it, fresh] = entries_.emplace(position, Entry{bit, origin});
    return fresh || it->second.bit == bit;
}

std::optional<std::uint8_t> KnownBitTable::at(std::uint64_t position) const
{
    auto it = entries_.find(position % period_);
    if (it == entries_.end())
        return std::nullopt;
    return it->second.bit;
}

Phase1Result phase1_reconstruct(const Bits& intercepted, const LinearModel& model, const FieldContext& ctx,
                                KnownBitTable& table, const Phase1Options& options)
{
    Phase1Result result;
    for (const RuleVector* rv : {&model.ca1, &model.ca2}) {
        for (const auto& expr : chained_subtriangles(intercepted, *rv, options.max_depth)) {
            for (auto [position, bit] : collapse_and_place(expr, ctx, model.l1, options.any_residue)) {
                auto existing = table.at(position);
                if (!existing) {
                    table.insert(position, bit, BitOrigin::reconstructed);
                    result.reconstructed.emplace_back(position % table.period(), bit);
                } else if (*existing != bit) {
                    result.consistent = false;
                }
            }
        }
    }
    std::sort(result.reconstructed.begin(), result.reconstructed.end());
    return result;
}

namespace {

// Incremental GF(2) elimination basis over field-element masks, each
// vector carrying the XOR of the sequence bits it stands for.
class PnRowBasis {
public:
    // false = the new relation contradicts the existing ones
    bool insert(std::uint64_t vec, std::uint8_t bit)
    {
        for (int i = 63; i >= 0; --i) {
            if (!((vec >> i) & 1))
                continue;
            if (pivot_[static_cast<std::size_t>(i)]) {
                vec ^= vec_[static_cast<std::size_t>(i)];
                bit ^= val_[static_cast<std::size_t>(i)];
            } else {
                pivot_[static_cast<std::size_t>(i)] = true;
                vec_[static_cast<std::size_t>(i)] = vec;
                val_[static_cast<std::size_t>(i)] = bit;
                ++rank_;
                return true;
            }
        }
        return bit == 0;
    }

    std::optional<std::uint8_t> solve(std::uint64_t vec) const
    {
        std::uint8_t bit = 0;
        for (int i = 63; i >= 0 && vec; --i) {
            if (!((vec >> i) & 1))
                continue;
            if (!pivot_[static_cast<std::size_t>(i)])
                return std::nullopt;
            vec ^= vec_[static_cast<std::size_t>(i)];
            bit ^= val_[static_cast<std::size_t>(i)];
        }
        return bit;
    }

    std::size_t rank() const noexcept { return rank_; }

private:
    std::array<std::uint64_t, 64> vec_{};
    std::array<std::uint8_t, 64> val_{};
    std::array<bool, 64> pivot_{};
    std::size_t rank_ = 0;
};

struct Survivor {
    Bits is1;
    Bits is2;
    Bits keystream;
    bool underdetermined = false;
};

class HypothesisSearch {
public:
    HypothesisSearch(const KnownBitTable& known, std::size_t l1, std::size_t l2, const FieldContext& ctx,
                     std::vector<SearchEvent>* trace, const Gf2Poly* c1)
        : ctx_(ctx), l1_(l1), l2_(l2), trace_(trace)
    {
        if (c1) {
            if (c1->degree() != static_cast<int>(l1))
                throw std::invalid_argument("c1 degree must equal l1");
            if (!is_primitive(*c1))
                throw std::invalid_argument("c1 must be primitive");
            for (std::size_t e : c1->exponents())
                if (e < l1)
                    c1_taps_.push_back(e);
            have_c1_ = true;
        }
        d_ = std::uint64_t{1} << (l1 - 1);
        t1_ = (std::uint64_t{1} << l1) - 1;
        tb_ = ctx.order();
        if (ctx.degree() != l2)
            throw std::invalid_argument("field context degree must equal l2");
        if (known.period() != tb_ * d_)
            throw std::invalid_argument("known-bit table period mismatch");
        inv_ = mod_inverse(t1_ % tb_, tb_);

        col_known_.resize(d_);
        for (const auto& [position, entry] : known.entries())
            col_known_[position % d_].emplace_back(static_cast<std::uint32_t>(position / d_), entry.bit);

        base_.assign(tb_, -1);
        // Column 1 sits at offset 0 by definition.
        for (auto [row, bit] : col_known_[0])
            base_[row] = static_cast<std::int8_t>(bit);
    }

    SearchResult run()
    {
        abits_.assign(1, 1); // a_0 = 1
        offsets_.assign(1, 0);
        dfs(1, 1);

        SearchResult result;
        result.nodes_visited = nodes_;

        std::vector<std::pair<Bits, Bits>> keys;
        for (const auto& s : survivors_) {
            if (s.underdetermined) {
                result.underdetermined = true;
                continue;
            }
            std::pair<Bits, Bits> key{s.is1, s.is2};
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
                keys.push_back(key);
                RecoveredKey rk;
                rk.is1 = LfsrState{s.is1};
                rk.is2 = LfsrState{s.is2};
                rk.nodes_visited = nodes_;
                result.survivors.push_back(std::move(rk));
            }
        }

        if (survivors_.empty()) {
            result.status = AttackStatus::no_consistent_key;
        } else if (keys.size() != 1 || result.underdetermined) {
            result.status = AttackStatus::ambiguous;
        } else {
            result.status = AttackStatus::found;
            result.key = result.survivors.front();
            for (const auto& s : survivors_)
                if (!s.underdetermined) {
                    result.keystream = s.keystream;
                    break;
                }
        }
        return result;
    }

private:
    std::uint64_t row_of(std::uint64_t index) const
    {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(index % tb_) * inv_ % tb_);
    }

    void emit(SearchEvent::Kind kind)
    {
        if (trace_)
            trace_->push_back(SearchEvent{kind, abits_});
    }

    // Projects column col at the given base offset; false on conflict.
    bool overlay(std::uint64_t col, std::uint64_t offset)
    {
        for (auto [row, bit] : col_known_[col]) {
            std::uint64_t target = (row + offset) % tb_;
            if (base_[target] == -1) {
                base_[target] = static_cast<std::int8_t>(bit);
                undo_.push_back(static_cast<std::uint32_t>(target));
            } else if (base_[target] != static_cast<std::int8_t>(bit)) {
                return false;
            }
        }
        return true;
    }

    void rollback(std::size_t mark)
    {
        while (undo_.size() > mark) {
            base_[undo_.back()] = -1;
            undo_.pop_back();
        }
    }

    void dfs(std::uint64_t t, std::uint64_t placed)
    {
        if (t == l1_) {
            ++nodes_;
            emit(SearchEvent::Kind::is1_examined);
        }
        if (placed == d_) {
            finalize();
            return;
        }
        if (t >= t1_ || t1_ - t < d_ - placed)
            return; // the remaining ones no longer fit

        if (have_c1_ && t >= l1_) {
            // Beyond IS1 the sequence is forced by the recurrence; a
            // forced 1 is still checked against the known bits.
            std::uint8_t bit = 0;
            for (std::size_t tap : c1_taps_)
                bit ^= abits_[t - l1_ + tap];
            abits_.push_back(bit);
            if (bit) {
                std::uint64_t offset = row_of(t);
                std::size_t mark = undo_.size();
                if (overlay(placed, offset)) {
                    offsets_.push_back(offset);
                    dfs(t + 1, placed + 1);
                    offsets_.pop_back();
                } else {
                    emit(SearchEvent::Kind::placement_rejected);
                }
                rollback(mark);
            } else {
                dfs(t + 1, placed);
            }
            abits_.pop_back();
            return;
        }

        // a_t = 1 first, matching the hypothesis ordering.
        std::uint64_t offset = row_of(t);
        std::size_t mark = undo_.size();
        abits_.push_back(1);
        if (overlay(placed, offset)) {
            offsets_.push_back(offset);
            dfs(t + 1, placed + 1);
            offsets_.pop_back();
        } else {
            emit(SearchEvent::Kind::placement_rejected);
        }
        rollback(mark);
        abits_.back() = 0;
        dfs(t + 1, placed);
        abits_.pop_back();
    }

    void finalize()
    {
        // Every known base bit is one linear relation on the PN phase.
        PnRowBasis basis;
        for (std::uint64_t row = 0; row < tb_; ++row)
            if (base_[row] >= 0 && !basis.insert(ctx_.alpha_pow(row), static_cast<std::uint8_t>(base_[row])))
                return; // known bits violate a PN-row identity

        Survivor s;
        s.is1.assign(l1_, 0);
        for (std::size_t i = 0; i < l1_ && i < abits_.size(); ++i)
            s.is1[i] = abits_[i];

        if (basis.rank() < l2_) {
            // The known bits do not pin the phase: several IS2 remain.
            s.underdetermined = true;
            survivors_.push_back(std::move(s));
            emit(SearchEvent::Kind::survivor);
            return;
        }

        Bits base_full(tb_);
        for (std::uint64_t row = 0; row < tb_; ++row)
            base_full[row] = *basis.solve(ctx_.alpha_pow(row));

        s.is2.resize(l2_);
        for (std::uint64_t i = 0; i < l2_; ++i)
            s.is2[i] = base_full[row_of(i)];

        s.keystream.resize(tb_ * d_);
        for (std::uint64_t row = 0; row < tb_; ++row)
            for (std::uint64_t col = 0; col < d_; ++col)
                s.keystream[row * d_ + col] = base_full[(row + offsets_[col]) % tb_];

        // Regeneration check against everything known so far.
        for (std::uint64_t row = 0; row < tb_; ++row)
            if (base_[row] >= 0 && base_full[row] != static_cast<std::uint8_t>(base_[row]))
                return;

        survivors_.push_back(std::move(s));
        emit(SearchEvent::Kind::survivor);
    }

    const FieldContext& ctx_;
    std::size_t l1_;
    std::size_t l2_;
    std::vector<SearchEvent>* trace_;
    bool have_c1_ = false;
    std::vector<std::size_t> c1_taps_;

    std::uint64_t d_ = 0, t1_ = 0, tb_ = 0, inv_ = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> col_known_;
    std::vector<std::int8_t> base_;
    std::vector<std::uint32_t> undo_;
    Bits abits_;
    std::vector<std::uint64_t> offsets_;
    std::uint64_t nodes_ = 0;
    std::vector<Survivor> survivors_;
};

} // namespace

SearchResult hypothesis_search(const KnownBitTable& known, std::size_t l1, std::size_t l2,
                               const FieldContext& ctx, std::vector<SearchEvent>* trace, const Gf2Poly* c1)
{
    if (l1 < 1 || l1 >= l2 || std::gcd(l1, l2) != 1)
        throw std::invalid_argument("need coprime lengths with l1 < l2");
    HypothesisSearch search(known, l1, l2, ctx, trace, c1);
    return search.run();
}

AttackResult attack_shrinking(const Bits& intercepted, std::size_t l1, std::size_t l2, const Gf2Poly& c2,
                              const AttackOptions& options, std::vector<SearchEvent>* trace)
{
    if (intercepted.empty())
        throw std::invalid_argument("empty intercepted sequence");
    if (c2.degree() != static_cast<int>(l2))
        throw std::invalid_argument("c2 degree must equal l2");

    LinearModel model = linearize_shrinking(l1, c2);
    FieldContext ctx(model.basepoly);
    std::uint64_t period = ctx.order() << (l1 - 1);

    AttackResult result;
    KnownBitTable table(period);
    for (std::size_t j = 0; j < intercepted.size(); ++j) {
        if (!table.insert(j, intercepted[j], BitOrigin::intercepted))
            return result; // window longer than a period and self-contradictory
    }
    for (auto [position, bit] : options.extra_known) {
        if (!table.insert(position, bit, BitOrigin::intercepted))
            return result;
    }

    if (intercepted.size() >= 2) {
        Phase1Result phase1 = phase1_reconstruct(intercepted, model, ctx, table, options.phase1);
        result.reconstructed = std::move(phase1.reconstructed);
        if (!phase1.consistent)
            return result; // reconstructed bits clash: the window is corrupt
    }

    SearchResult search = hypothesis_search(table, l1, l2, ctx, trace,
                                            options.c1 ? &*options.c1 : nullptr);
    result.status = search.status;
    result.key = search.key;
    result.keystream = std::move(search.keystream);
    result.survivors = std::move(search.survivors);
    result.nodes_visited = search.nodes_visited;
    result.key.nodes_visited = search.nodes_visited;
    return result;
}

} // namespace sgca
