#include "sgca/linearize.hpp"

#include <numeric>
#include <stdexcept>

#include "sgca/gf2field.hpp"
#include "sgca/keystream.hpp"

namespace sgca {

namespace {

constexpr std::size_t kMaxSynthesisDegree = 24;

// Depth-first search over rule prefixes, carrying (P_{i-1}, P_i) as
// word-sized polynomials. Trying 0 before 1 yields the lexicographically
// smallest matching vector.
bool synth_dfs(std::uint64_t target, std::size_t depth, std::size_t l,
               std::uint64_t p_prev, std::uint64_t p_cur, Bits& rules)
{
    if (depth == l)
        return p_cur == target;
    for (std::uint8_t r : {0, 1}) {
        std::uint64_t next = (p_cur << 1) ^ (r ? p_cur : 0) ^ p_prev;
        rules.push_back(r);
        if (synth_dfs(target, depth + 1, l, p_cur, next, rules))
            return true;
        rules.pop_back();
    }
    return false;
}

std::uint64_t poly_to_bits(const Gf2Poly& p)
{
    std::uint64_t bits = 0;
    for (std::size_t e : p.exponents())
        bits |= std::uint64_t{1} << e;
    return bits;
}

} // namespace

SynthesisPair synthesize_ca_pair(const Gf2Poly& p)
{
    int deg = p.degree();
    if (deg < 1)
        throw std::invalid_argument("synthesis needs degree >= 1");
    if (static_cast<std::size_t>(deg) > kMaxSynthesisDegree)
        throw std::invalid_argument("synthesis degree above supported bound");
    if (!is_irreducible(p))
        throw std::invalid_argument("synthesis input must be irreducible: " + p.str());

    std::size_t l = static_cast<std::size_t>(deg);
    Bits rules;
    rules.reserve(l);
    if (!synth_dfs(poly_to_bits(p), 0, l, 0, 1, rules))
        throw std::runtime_error("no 90/150 automaton found for " + p.str());

    SynthesisPair pair;
    pair.first = RuleVector{std::move(rules)};
    pair.second = reversed(pair.first);
    if (ca_char_poly(pair.second) != p)
        throw std::logic_error("mirror automaton fails the characteristic polynomial check");
    return pair;
}

RuleVector concat_double(const RuleVector& rules)
{
    if (rules.size() == 0)
        throw std::invalid_argument("empty rule vector");
    RuleVector s = rules;
    s.rules.back() ^= 1;
    RuleVector out = s;
    out.rules.insert(out.rules.end(), s.rules.rbegin(), s.rules.rend());
    return out;
}

namespace {

LinearModel build_model(std::size_t l1, const Gf2Poly& c2, std::uint64_t distance)
{
    std::size_t l2 = static_cast<std::size_t>(c2.degree());
    std::uint64_t order = (std::uint64_t{1} << l2) - 1;
    distance %= order;
    if (distance == 0 || std::gcd(distance, order) != 1)
        throw std::invalid_argument("degenerate decimation distance " + std::to_string(distance));

    LinearModel model;
    model.basepoly = coset_min_poly(c2, distance);
    model.exponent = distance;
    model.l1 = l1;
    model.c2 = c2;

    SynthesisPair pair = synthesize_ca_pair(model.basepoly);
    model.ca1 = pair.first;
    model.ca2 = pair.second;
    for (std::size_t k = 1; k < l1; ++k) {
        model.ca1 = concat_double(model.ca1);
        model.ca2 = concat_double(model.ca2);
    }
    return model;
}

} // namespace

LinearModel linearize_shrinking(std::size_t l1, const Gf2Poly& c2)
{
    if (c2.degree() < 1)
        throw std::invalid_argument("need a characteristic polynomial of degree >= 1");
    std::size_t l2 = static_cast<std::size_t>(c2.degree());
    if (l1 < 1 || l1 >= l2 || std::gcd(l1, l2) != 1)
        throw std::invalid_argument("need coprime lengths with l1 < l2");
    if (!is_primitive(c2))
        throw std::invalid_argument("c2 must be primitive");
    std::uint64_t e = (std::uint64_t{1} << l1) - 1;
    return build_model(l1, c2, e);
}

LinearModel linearize_ccsg(std::size_t l1, const Gf2Poly& c2, const std::vector<std::size_t>& taps,
                           const Gf2Poly& c1, const LfsrState& seed1)
{
    if (taps.empty())
        return linearize_shrinking(l1, c2);

    std::size_t l2 = static_cast<std::size_t>(c2.degree());
    LfsrSpec sr1 = LfsrSpec::make(c1);
    LfsrSpec sr2 = LfsrSpec::make(c2);
    if (sr1.length != l1)
        throw std::invalid_argument("c1 degree does not match l1");
    CcsgSpec spec = CcsgSpec::make(ShrinkGenSpec::make(sr1, seed1, sr2, LfsrState{Bits(l2, 1)}), taps);

    // Total SR2 advance over one SR1 period.
    std::uint64_t t1 = (std::uint64_t{1} << l1) - 1;
    std::uint64_t d = 0;
    LfsrState s1 = seed1;
    for (std::uint64_t t = 0; t < t1; ++t) {
        d += xt_value(spec, s1);
        lfsr_next(sr1, s1);
    }
    return build_model(l1, c2, d);
}

std::string rule_vector_hex(const RuleVector& rules)
{
    if (rules.size() == 0 || rules.size() % 4 != 0)
        throw std::invalid_argument("hex encoding needs a multiple of 4 cells");
    static const char digits[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(rules.size() / 4);
    for (std::size_t i = 0; i < rules.size(); i += 4) {
        unsigned v = (rules.rules[i] << 3) | (rules.rules[i + 1] << 2) | (rules.rules[i + 2] << 1) | rules.rules[i + 3];
        out.push_back(digits[v]);
    }
    return out;
}

RuleVector rule_vector_from_hex(std::string_view hex)
{
    if (hex.empty())
        throw std::invalid_argument("empty hex rule vector");
    RuleVector rv;
    rv.rules.reserve(hex.size() * 4);
    for (char c : hex) {
        unsigned v;
        if (c >= '0' && c <= '9')
            v = static_cast<unsigned>(c - '0');
        else if (c >= 'A' && c <= 'F')
            v = static_cast<unsigned>(c - 'A') + 10;
        else if (c >= 'a' && c <= 'f')
            v = static_cast<unsigned>(c - 'a') + 10;
        else
            throw std::invalid_argument("bad hex digit in rule vector");
        for (int b = 3; b >= 0; --b)
            rv.rules.push_back(static_cast<std::uint8_t>((v >> b) & 1));
    }
    return rv;
}

std::string format_model(const LinearModel& model)
{
    auto vector_text = [](const RuleVector& rv) {
        return rv.size() % 4 == 0 ? rule_vector_hex(rv) : rv.str();
    };
    std::string out;
    out += "l1=" + std::to_string(model.l1) + "\n";
    out += "c2=" + model.c2.str() + "\n";
    out += "basepoly=" + model.basepoly.str() + "\n";
    out += "exponent=" + std::to_string(model.exponent) + "\n";
    out += "ca1=" + vector_text(model.ca1) + "\n";
    out += "ca2=" + vector_text(model.ca2) + "\n";
    return out;
}

LinearModel parse_model(std::string_view block)
{
    LinearModel model;
    bool saw_l1 = false, saw_c2 = false, saw_base = false, saw_exp = false, saw_ca1 = false, saw_ca2 = false;

    std::size_t expected_cells = 0;
    auto parse_vector = [&](const std::string& text) {
        bool binary = text.find_first_not_of("01") == std::string::npos && text.size() == expected_cells;
        return binary ? RuleVector::from_string(text) : rule_vector_from_hex(text);
    };

    std::size_t pos = 0;
    std::vector<std::pair<std::string, std::string>> fields;
    while (pos < block.size()) {
        std::size_t eol = block.find('\n', pos);
        std::string_view line = block.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? block.size() : eol + 1;
        if (line.empty())
            continue;
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("model block line has no '=': " + std::string(line));
        fields.emplace_back(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
    }

    // two passes: the rule-vector lines need l1 and c2 to disambiguate
    // a short all-0/1 hex string from a binary one
    for (const auto& [key, value] : fields) {
        if (key == "l1") {
            model.l1 = std::stoull(value);
            saw_l1 = true;
        } else if (key == "c2") {
            model.c2 = Gf2Poly::parse(value);
            saw_c2 = true;
        } else if (key == "basepoly") {
            model.basepoly = Gf2Poly::parse(value);
            saw_base = true;
        } else if (key == "exponent") {
            model.exponent = std::stoull(value);
            saw_exp = true;
        }
    }
    if (!saw_l1 || !saw_c2 || !saw_base || !saw_exp)
        throw std::invalid_argument("model block is missing a required field");

    expected_cells = static_cast<std::size_t>(model.c2.degree()) << (model.l1 - 1);
    for (const auto& [key, value] : fields) {
        if (key == "ca1") {
            model.ca1 = parse_vector(value);
            saw_ca1 = true;
        } else if (key == "ca2") {
            model.ca2 = parse_vector(value);
            saw_ca2 = true;
        }
    }
    if (!saw_ca1 || !saw_ca2)
        throw std::invalid_argument("model block is missing a rule vector");
    if (model.ca1.size() != expected_cells || model.ca2.size() != expected_cells)
        throw std::invalid_argument("model rule vectors have the wrong length");
    return model;
}

} // namespace sgca
