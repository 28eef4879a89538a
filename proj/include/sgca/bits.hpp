#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgca {

// Bit sequences are stored one bit per byte, value 0 or 1.
using Bits = std::vector<std::uint8_t>;

// ASCII bit text: characters '0'/'1', all whitespace ignored.
Bits parse_bits(std::string_view text);
std::string format_bits(const Bits& bits);

// Known-bit text: one "position:bit" pair per line, decimal position.
// Blank lines are skipped.
std::vector<std::pair<std::uint64_t, std::uint8_t>> parse_known_bits(std::string_view text);
std::string format_known_bits(const std::vector<std::pair<std::uint64_t, std::uint8_t>>& pairs);

} // namespace sgca
