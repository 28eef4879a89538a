#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sgca/attack.hpp"
#include "sgca/bits.hpp"
#include "sgca/keystream.hpp"
#include "sgca/linearize.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitNoKey = 3;
constexpr int kExitAmbiguous = 4;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

sgca::LfsrState parse_seed(const std::string& text)
{
    return sgca::LfsrState{sgca::parse_bits(text)};
}

sgca::RuleVector parse_rules(const std::string& text, bool hex)
{
    if (hex)
        return sgca::rule_vector_from_hex(text);
    return sgca::RuleVector::from_string(text);
}

struct GenerateArgs {
    std::string poly1, seed1, poly2, seed2;
    std::vector<std::size_t> taps;
    std::uint64_t count = 0;
};

sgca::ShrinkGenSpec make_sg(const GenerateArgs& a)
{
    return sgca::ShrinkGenSpec::make(sgca::LfsrSpec::make(sgca::Gf2Poly::parse(a.poly1)), parse_seed(a.seed1),
                                     sgca::LfsrSpec::make(sgca::Gf2Poly::parse(a.poly2)), parse_seed(a.seed2));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Shrinking-generator keystreams, 90/150 cellular automata models, and key recovery"};
    app.require_subcommand(1);

    // lfsr
    std::string lfsr_poly, lfsr_seed;
    std::uint64_t lfsr_count = 0;
    bool lfsr_any = false;
    auto* lfsr = app.add_subcommand("lfsr", "Generate an LFSR output stream");
    lfsr->add_option("--poly", lfsr_poly, "characteristic polynomial")->required();
    lfsr->add_option("--seed", lfsr_seed, "initial stages, stage 0 first")->required();
    lfsr->add_option("-n,--count", lfsr_count, "number of output bits")->required();
    lfsr->add_flag("--allow-nonprimitive", lfsr_any, "skip the primitivity check");

    // sg / ccsg
    GenerateArgs gen;
    auto* sg = app.add_subcommand("sg", "Generate a shrinking-generator keystream");
    auto* ccsg = app.add_subcommand("ccsg", "Generate a clock-controlled shrinking-generator keystream");
    for (auto* cmd : {sg, ccsg}) {
        cmd->add_option("--poly1", gen.poly1, "SR1 characteristic polynomial")->required();
        cmd->add_option("--seed1", gen.seed1, "SR1 initial state, stage 0 first")->required();
        cmd->add_option("--poly2", gen.poly2, "SR2 characteristic polynomial")->required();
        cmd->add_option("--seed2", gen.seed2, "SR2 initial state, stage 0 first")->required();
        cmd->add_option("-n,--count", gen.count, "number of output bits")->required();
    }
    ccsg->add_option("--taps", gen.taps, "SR1 stage indices feeding the decimation function")
        ->delimiter(',')
        ->expected(-1);

    // linearize
    std::size_t lin_l1 = 0;
    std::string lin_poly2, lin_poly1, lin_seed1;
    std::vector<std::size_t> lin_taps;
    auto* lin = app.add_subcommand("linearize", "Compute the pair of CA modelling a generator");
    lin->add_option("--l1", lin_l1, "length of SR1")->required();
    lin->add_option("--poly2", lin_poly2, "SR2 characteristic polynomial")->required();
    lin->add_option("--taps", lin_taps, "decimation taps (CCSG)")->delimiter(',')->expected(-1);
    lin->add_option("--poly1", lin_poly1, "SR1 characteristic polynomial (CCSG only)");
    lin->add_option("--seed1", lin_seed1, "SR1 initial state (CCSG only)");

    // synthesize
    std::string synth_poly;
    auto* synth = app.add_subcommand("synthesize", "Find the two 90/150 CA for an irreducible polynomial");
    synth->add_option("--poly", synth_poly, "irreducible polynomial")->required();

    // charpoly
    std::string cp_rules;
    bool cp_hex = false;
    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a rule vector");
    charpoly->add_option("--rules", cp_rules, "rule vector (binary, or hex with --hex)")->required();
    charpoly->add_flag("--hex", cp_hex, "rule vector is in hex");

    // attack
    std::size_t atk_l1 = 0;
    std::string atk_poly1, atk_poly2, atk_input, atk_known;
    std::size_t atk_max_depth = 0;
    bool atk_any_residue = false, atk_full = false;
    auto* attack = app.add_subcommand("attack", "Recover the LFSR states from an intercepted keystream prefix");
    attack->add_option("--l1", atk_l1, "length of SR1")->required();
    attack->add_option("--poly1", atk_poly1, "SR1 characteristic polynomial, when known");
    attack->add_option("--poly2", atk_poly2, "SR2 characteristic polynomial")->required();
    attack->add_option("--input", atk_input, "file with the intercepted bits")->required();
    attack->add_option("--known", atk_known, "extra known bits, position:bit per line");
    attack->add_option("--max-depth", atk_max_depth, "chained sub-triangle depth cap");
    attack->add_flag("--any-residue", atk_any_residue, "collapse every common residue class");
    attack->add_flag("--full", atk_full, "also print one full keystream period");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*lfsr) {
            auto spec = sgca::LfsrSpec::make(sgca::Gf2Poly::parse(lfsr_poly), !lfsr_any);
            std::cout << sgca::format_bits(sgca::lfsr_stream(spec, parse_seed(lfsr_seed), lfsr_count)) << "\n";
        } else if (*sg) {
            std::cout << sgca::format_bits(sgca::sg_stream(make_sg(gen), gen.count)) << "\n";
        } else if (*ccsg) {
            auto spec = sgca::CcsgSpec::make(make_sg(gen), gen.taps);
            std::cout << sgca::format_bits(sgca::ccsg_stream(spec, gen.count)) << "\n";
        } else if (*lin) {
            sgca::LinearModel model;
            if (lin_taps.empty()) {
                model = sgca::linearize_shrinking(lin_l1, sgca::Gf2Poly::parse(lin_poly2));
            } else {
                if (lin_poly1.empty() || lin_seed1.empty())
                    throw std::runtime_error("CCSG linearization needs --poly1 and --seed1");
                model = sgca::linearize_ccsg(lin_l1, sgca::Gf2Poly::parse(lin_poly2), lin_taps,
                                             sgca::Gf2Poly::parse(lin_poly1), parse_seed(lin_seed1));
            }
            std::cout << sgca::format_model(model);
        } else if (*synth) {
            auto pair = sgca::synthesize_ca_pair(sgca::Gf2Poly::parse(synth_poly));
            std::cout << pair.first.str() << "\n" << pair.second.str() << "\n";
        } else if (*charpoly) {
            std::cout << sgca::ca_char_poly(parse_rules(cp_rules, cp_hex)).str() << "\n";
        } else if (*attack) {
            sgca::Bits intercepted = sgca::parse_bits(read_file(atk_input));
            sgca::AttackOptions options;
            options.phase1.max_depth = atk_max_depth;
            options.phase1.any_residue = atk_any_residue;
            if (!atk_known.empty())
                options.extra_known = sgca::parse_known_bits(read_file(atk_known));
            if (!atk_poly1.empty())
                options.c1 = sgca::Gf2Poly::parse(atk_poly1);

            auto c2 = sgca::Gf2Poly::parse(atk_poly2);
            auto result = sgca::attack_shrinking(intercepted, atk_l1,
                                                 static_cast<std::size_t>(c2.degree()), c2, options);
            if (result.status == sgca::AttackStatus::no_consistent_key) {
                std::cerr << "no consistent key\n";
                return kExitNoKey;
            }
            if (result.status == sgca::AttackStatus::ambiguous) {
                std::cerr << "multiple surviving keys\n";
                return kExitAmbiguous;
            }
            std::cout << "IS1=" << sgca::format_bits(result.key.is1.stages)
                      << " IS2=" << sgca::format_bits(result.key.is2.stages) << "\n";
            std::cout << "nodes=" << result.nodes_visited << "\n";
            std::cout << "reconstructed=" << result.reconstructed.size() << "\n";
            std::cout << sgca::format_known_bits(result.reconstructed);
            if (atk_full)
                std::cout << "keystream=" << sgca::format_bits(result.keystream) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
