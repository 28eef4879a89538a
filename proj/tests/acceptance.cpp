// Acceptance suite: runs every top-level correctness criterion and
// prints one PASS/FAIL line each. Exits nonzero if any fails.

#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "sgca/attack.hpp"
#include "sgca/bits.hpp"
#include "sgca/ca90150.hpp"
#include "sgca/gf2field.hpp"
#include "sgca/gf2poly.hpp"
#include "sgca/keystream.hpp"
#include "sgca/lfsr.hpp"
#include "sgca/linearize.hpp"

using namespace sgca;

namespace {

int failures = 0;

void criterion(int n, const char* what, const std::function<bool()>& run)
{
    bool ok = false;
    std::string note;
    try {
        ok = run();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("[%2d] %s  %s%s\n", n, ok ? "PASS" : "FAIL", what, note.c_str());
    if (!ok)
        ++failures;
}

Gf2Poly P(const char* text)
{
    return Gf2Poly::parse(text);
}

Bits unit_seed(std::size_t l)
{
    Bits b(l, 0);
    b[0] = 1;
    return b;
}

std::vector<Gf2Poly> primitive_polys(std::size_t degree)
{
    std::vector<Gf2Poly> out;
    for (std::uint64_t mask = (std::uint64_t{1} << degree) + 1; mask < (std::uint64_t{1} << (degree + 1));
         mask += 2) {
        Gf2Poly p;
        for (std::size_t i = 0; i <= degree; ++i)
            if ((mask >> i) & 1)
                p.set_coeff(i, true);
        if (is_primitive(p))
            out.push_back(p);
    }
    return out;
}

std::size_t least_period(const Bits& seq)
{
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

ShrinkGenSpec demo_sg()
{
    return ShrinkGenSpec::make(LfsrSpec::make(P("1+x^3+x^4")), LfsrState{{1, 0, 0, 1}},
                               LfsrSpec::make(P("1+x+x^3+x^4+x^5")), LfsrState{{1, 0, 1, 0, 1}});
}

bool reproduces_at_cell_one(const RuleVector& rules, const Bits& sequence)
{
    CaState state = state_from_leading_cell(rules, sequence);
    for (std::size_t t = 0; t < sequence.size(); ++t) {
        if (state.cells[0] != sequence[t])
            return false;
        state = ca_step(rules, state);
    }
    return true;
}

struct SmallGenerator {
    std::size_t l1, l2;
    Gf2Poly c1, c2;
};

// Every coprime pair l1 <= 4, l2 <= 7 with every primitive polynomial choice.
std::vector<SmallGenerator> small_generators()
{
    std::vector<SmallGenerator> out;
    for (std::size_t l1 = 1; l1 <= 4; ++l1)
        for (std::size_t l2 = l1 + 1; l2 <= 7; ++l2) {
            if (std::gcd(l1, l2) != 1)
                continue;
            for (const auto& c1 : primitive_polys(l1))
                for (const auto& c2 : primitive_polys(l2))
                    out.push_back(SmallGenerator{l1, l2, c1, c2});
        }
    return out;
}

} // namespace

int main()
{
    criterion(1, "classic shrinking-generator vectors (both registers and the shrunk prefix)", [] {
        LfsrSpec sr1 = LfsrSpec::make(P("1+x^2+x^3"));
        LfsrSpec sr2 = LfsrSpec::make(P("1+x+x^4"));
        if (lfsr_stream(sr1, LfsrState{{1, 0, 0}}, 7) != Bits{1, 0, 0, 1, 1, 1, 0})
            return false;
        if (lfsr_stream(sr2, LfsrState{{1, 0, 0, 0}}, 15) !=
            Bits{1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1})
            return false;
        auto sg = ShrinkGenSpec::make(sr1, LfsrState{{1, 0, 0}}, sr2, LfsrState{{1, 0, 0, 0}});
        return sg_stream(sg, 13) == parse_bits("1010110110010");
    });

    criterion(2, "clock-controlled generator vectors (X values, decimated stream, output)", [] {
        auto base = ShrinkGenSpec::make(LfsrSpec::make(P("1+x^2+x^3")), LfsrState{{1, 0, 0}},
                                        LfsrSpec::make(P("1+x+x^4")), LfsrState{{1, 0, 0, 0}});
        auto spec = CcsgSpec::make(base, {0});
        LfsrState s = spec.base.seed1;
        Bits xs;
        for (int i = 0; i < 8; ++i) {
            xs.push_back(static_cast<std::uint8_t>(xt_value(spec, s)));
            lfsr_next(spec.base.sr1, s);
        }
        if (xs != Bits{2, 1, 1, 2, 2, 2, 1, 2})
            return false;
        if (ccsg_decimated(spec, 10) != Bits{1, 0, 0, 1, 0, 1, 1, 0, 1, 1})
            return false;
        return ccsg_stream(spec, 12) == parse_bits("110101011011");
    });

    criterion(3, "period, ones and linear complexity laws over all small generators", [] {
        for (const auto& g : small_generators()) {
            SgTheory th = sg_theory(g.l1, g.l2);
            auto spec = ShrinkGenSpec::make(LfsrSpec::make(g.c1), LfsrState{unit_seed(g.l1)},
                                            LfsrSpec::make(g.c2), LfsrState{unit_seed(g.l2)});
            Bits z = sg_stream(spec, 2 * th.period);
            if (least_period(z) != th.period)
                return false;
            std::uint64_t ones = std::accumulate(z.begin(), z.begin() + static_cast<long>(th.period),
                                                 std::uint64_t{0});
            if (ones != th.ones)
                return false;
            auto bm = berlekamp_massey(z);
            if (bm.linear_complexity < th.lc_min || bm.linear_complexity > th.lc_max)
                return false;
            Gf2Poly base = coset_min_poly(g.c2, (std::uint64_t{1} << g.l1) - 1);
            bool matched = false;
            for (std::uint64_t n = 1; n <= (std::uint64_t{1} << (g.l1 - 1)); ++n) {
                if (4 * n <= (std::uint64_t{1} << g.l1))
                    continue; // below the strict lower bound
                if (bm.char_poly == base.pow(n)) {
                    matched = true;
                    break;
                }
            }
            if (!matched)
                return false;
        }
        return true;
    });

    criterion(4, "ten-cell automaton evolution table", [] {
        const RuleVector rules = RuleVector::from_string("0111001110");
        const std::vector<Bits> rows = {
            {0, 0, 0, 1, 1, 1, 0, 1, 1, 0}, {0, 0, 1, 0, 0, 1, 0, 0, 0, 1},
            {0, 1, 1, 1, 1, 0, 1, 0, 1, 0}, {1, 0, 1, 1, 1, 0, 1, 0, 1, 1},
            {0, 0, 0, 1, 1, 0, 1, 0, 0, 1}, {0, 0, 1, 0, 1, 0, 1, 1, 1, 0},
            {0, 1, 1, 0, 0, 0, 0, 1, 0, 1}, {1, 0, 0, 1, 0, 0, 1, 1, 0, 0},
            {0, 1, 1, 1, 1, 1, 0, 0, 1, 0}, {1, 0, 1, 1, 0, 1, 1, 1, 1, 1},
        };
        EvolutionTable t = ca_run(rules, CaState{rows[0]}, 9);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (t.rows[i] != rows[i])
                return false;
        return true;
    });

    criterion(5, "degree-5 linearization chain (coset polynomial, synthesis, doubling)", [] {
        if (coset_min_poly(P("1+x+x^2+x^4+x^5"), 7) != P("1+x^2+x^5"))
            return false;
        SynthesisPair pair = synthesize_ca_pair(P("1+x^2+x^5"));
        if (pair.first.str() != "01111" || pair.second.str() != "11110")
            return false;
        RuleVector d1a = concat_double(pair.first);
        RuleVector d1b = concat_double(pair.second);
        if (d1a.str() != "0111001110" || d1b.str() != "1111111111")
            return false;
        RuleVector d2a = concat_double(d1a);
        RuleVector d2b = concat_double(d1b);
        Gf2Poly expect = P("1+x^2+x^5").pow(4);
        return d2a.size() == 20 && d2b.size() == 20 && ca_char_poly(d2a) == expect &&
               ca_char_poly(d2b) == expect;
    });

    criterion(6, "length-40 model hex encoding and characteristic polynomial", [] {
        LinearModel m = linearize_shrinking(4, P("1+x+x^3+x^4+x^5"));
        bool hex_ok = rule_vector_hex(m.ca1) == "8C0300C031" || rule_vector_hex(m.ca2) == "8C0300C031";
        Gf2Poly expect = P("1+x+x^2+x^4+x^5").pow(8);
        return hex_ok && ca_char_poly(m.ca1) == expect && ca_char_poly(m.ca2) == expect;
    });

    criterion(7, "model fidelity: every small generator reproduced at cell one", [] {
        for (const auto& g : small_generators()) {
            auto spec = ShrinkGenSpec::make(LfsrSpec::make(g.c1), LfsrState{unit_seed(g.l1)},
                                            LfsrSpec::make(g.c2), LfsrState{unit_seed(g.l2)});
            Bits z = sg_stream(spec, sg_theory(g.l1, g.l2).period);
            LinearModel m = linearize_shrinking(g.l1, g.c2);
            if (!reproduces_at_cell_one(m.ca1, z) || !reproduces_at_cell_one(m.ca2, z))
                return false;
        }
        return true;
    });

    criterion(8, "phase 1 on the 24-bit window: exactly 32 bits at the expected positions", [] {
        Bits z = sg_stream(demo_sg(), 24);
        AttackResult res = attack_shrinking(z, 4, 5, P("1+x+x^3+x^4+x^5"));
        if (res.reconstructed.size() != 32)
            return false;
        std::vector<std::uint64_t> expected;
        for (std::uint64_t p = 56; p < 64; ++p)
            expected.push_back(p);
        for (std::uint64_t p = 152; p < 168; ++p)
            expected.push_back(p);
        for (std::uint64_t p = 184; p < 192; ++p)
            expected.push_back(p);
        const Bits row7 = {0, 1, 1, 1, 0, 0, 1, 0};
        const Bits row19 = {0, 0, 1, 1, 1, 1, 0, 1};
        const Bits row20 = {0, 1, 0, 0, 1, 1, 1, 1};
        const Bits row23 = {1, 1, 1, 0, 1, 1, 1, 0};
        Bits values;
        values.insert(values.end(), row7.begin(), row7.end());
        values.insert(values.end(), row19.begin(), row19.end());
        values.insert(values.end(), row20.begin(), row20.end());
        values.insert(values.end(), row23.begin(), row23.end());
        for (std::size_t i = 0; i < 32; ++i)
            if (res.reconstructed[i].first != expected[i] || res.reconstructed[i].second != values[i])
                return false;
        return count_reconstructible(std::vector<std::uint64_t>(8, 3)) == 32;
    });

    criterion(9, "phase 2 on the 24-bit window: rejections, key, and node bound", [] {
        if (b_positions(4, 5) != std::vector<std::uint64_t>{29, 27, 25, 23})
            return false;
        Bits z = sg_stream(demo_sg(), 24);
        std::vector<SearchEvent> trace;
        AttackResult res = attack_shrinking(z, 4, 5, P("1+x+x^3+x^4+x^5"), {}, &trace);
        if (res.status != AttackStatus::found)
            return false;
        if (res.key.is1.stages != Bits{1, 0, 0, 1} || res.key.is2.stages != Bits{1, 0, 1, 0, 1})
            return false;
        if (res.nodes_visited > 8)
            return false;
        bool rejected_101 = false, rejected_1000 = false;
        for (const auto& e : trace) {
            if (e.kind != SearchEvent::Kind::placement_rejected)
                continue;
            if (e.prefix == Bits{1, 0, 1})
                rejected_101 = true;
            if (e.prefix.size() >= 4 && Bits(e.prefix.begin(), e.prefix.begin() + 4) == Bits{1, 0, 0, 0})
                rejected_1000 = true;
        }
        return rejected_101 && rejected_1000;
    });

    criterion(10, "attack soundness/completeness over every seed of two generator families", [] {
        struct Family {
            std::size_t l1, l2;
            const char *c1, *c2;
        };
        for (const Family& f : {Family{3, 4, "1+x^2+x^3", "1+x+x^4"}, Family{3, 5, "1+x+x^3", "1+x^2+x^5"}}) {
            Gf2Poly c1 = P(f.c1), c2 = P(f.c2);
            LfsrSpec sr1 = LfsrSpec::make(c1);
            LfsrSpec sr2 = LfsrSpec::make(c2);
            std::size_t r = 3u << (f.l1 - 1);
            std::uint64_t total_nodes = 0, runs = 0;
            for (std::uint64_t m1 = 1; m1 < (1u << f.l1); ++m1) {
                for (std::uint64_t m2 = 1; m2 < (1u << f.l2); ++m2) {
                    Bits s1(f.l1), s2(f.l2);
                    for (std::size_t i = 0; i < f.l1; ++i)
                        s1[i] = static_cast<std::uint8_t>((m1 >> i) & 1);
                    for (std::size_t i = 0; i < f.l2; ++i)
                        s2[i] = static_cast<std::uint8_t>((m2 >> i) & 1);
                    auto spec = ShrinkGenSpec::make(sr1, LfsrState{s1}, sr2, LfsrState{s2});
                    Bits z = sg_stream(spec, r);
                    AttackOptions options;
                    options.c1 = c1;
                    AttackResult res = attack_shrinking(z, f.l1, f.l2, c2, options);
                    total_nodes += res.nodes_visited;
                    ++runs;
                    if (res.nodes_visited > (1u << (f.l1 - 1)))
                        return false;

                    // soundness: every phase-1 bit equals the real keystream bit
                    Bits full = sg_stream(spec, sg_theory(f.l1, f.l2).period);
                    for (auto [p, b] : res.reconstructed)
                        if (full[p] != b)
                            return false;

                    // completeness: the true branch is never pruned; the
                    // states at the first kept step must be among the
                    // survivors (they ARE the seeds when a_0 = 1)
                    LfsrState t1 = spec.seed1, t2 = spec.seed2;
                    while (t1.stages[0] == 0) {
                        lfsr_next(sr1, t1);
                        lfsr_next(sr2, t2);
                    }
                    bool true_key_alive = false;
                    for (const auto& k : res.survivors) {
                        if (k.is1.stages == t1.stages && k.is2.stages == t2.stages)
                            true_key_alive = true;
                        // every surviving key regenerates the window
                        auto regen = ShrinkGenSpec::make(sr1, k.is1, sr2, k.is2);
                        if (sg_stream(regen, r) != z)
                            return false;
                    }
                    if (!true_key_alive)
                        return false;

                    // unique data must give the unique key back
                    if (res.survivors.size() == 1 &&
                        (res.status != AttackStatus::found || res.key.is1.stages != t1.stages ||
                         res.key.is2.stages != t2.stages))
                        return false;
                }
            }
            if (total_nodes >= runs * (1u << (f.l1 - 1)))
                return false;
        }
        return true;
    });

    criterion(11, "clock-controlled path: reconstructed distance validated end to end", [] {
        LinearModel m = linearize_ccsg(3, P("1+x+x^4"), {0}, P("1+x^2+x^3"), LfsrState{{1, 0, 0}});
        if (m.exponent != 11)
            return false;
        if (m.basepoly != coset_min_poly(P("1+x+x^4"), 11))
            return false;
        auto spec = CcsgSpec::make(ShrinkGenSpec::make(LfsrSpec::make(P("1+x^2+x^3")), LfsrState{{1, 0, 0}},
                                                       LfsrSpec::make(P("1+x+x^4")), LfsrState{{1, 0, 0, 0}}),
                                   {0});
        Bits z2 = ccsg_stream(spec, 120); // two full periods
        auto bm = berlekamp_massey(z2);
        if (!m.basepoly.divides(bm.char_poly))
            return false;
        Bits z = ccsg_stream(spec, 60);
        return reproduces_at_cell_one(m.ca1, z) && reproduces_at_cell_one(m.ca2, z);
    });

    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}
