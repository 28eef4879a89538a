#include "sgca/bits.hpp"

#include <cctype>
#include <stdexcept>

namespace sgca {

Bits parse_bits(std::string_view text)
{
    Bits out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '0')
            out.push_back(0);
        else if (c == '1')
            out.push_back(1);
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bit text: unexpected character '" + std::string(1, c) + "'");
    }
    return out;
}

std::string format_bits(const Bits& bits)
{
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits)
        s.push_back(b ? '1' : '0');
    return s;
}

std::vector<std::pair<std::uint64_t, std::uint8_t>> parse_known_bits(std::string_view text)
{
    std::vector<std::pair<std::uint64_t, std::uint8_t>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;

        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                trimmed.push_back(c);
        if (trimmed.empty())
            continue;

        std::size_t colon = trimmed.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 >= trimmed.size())
            throw std::invalid_argument("known-bit line must look like \"position:bit\": " + trimmed);
        std::uint64_t position = std::stoull(trimmed.substr(0, colon));
        std::string bitpart = trimmed.substr(colon + 1);
        if (bitpart != "0" && bitpart != "1")
            throw std::invalid_argument("known-bit value must be 0 or 1: " + trimmed);
        out.emplace_back(position, bitpart == "1" ? 1 : 0);
    }
    return out;
}

std::string format_known_bits(const std::vector<std::pair<std::uint64_t, std::uint8_t>>& pairs)
{
    std::string s;
    for (const auto& [position, bit] : pairs) {
        s += std::to_string(position);
        s += ':';
        s += bit ? '1' : '0';
        s += '\n';
    }
    return s;
}

} // namespace sgca
