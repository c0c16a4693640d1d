#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace chainrec::jpeg {

// Zigzag position -> natural (row-major) position, and its inverse.
extern const std::array<int, 64> kZigzagToNatural;
extern const std::array<int, 64> kNaturalToZigzag;

// ITU T.81 Annex K.1/K.2 typical quantization tables, natural order.
extern const std::array<std::uint16_t, 64> kAnnexKLuma;
extern const std::array<std::uint16_t, 64> kAnnexKChroma;

// IJG quality mapping: scale an Annex-K table by quality 1..100,
// clamping entries to 1..255.
std::array<std::uint16_t, 64> quality_scaled(const std::array<std::uint16_t, 64>& base_natural,
                                             int quality);

std::array<std::uint16_t, 64> natural_to_zigzag_order(const std::array<std::uint16_t, 64>& natural);
std::array<std::uint16_t, 64> zigzag_to_natural_order(const std::array<std::uint16_t, 64>& zigzag);

// One Huffman table spec: code counts per length 1..16 plus symbol values.
struct HuffmanSpec {
    std::array<std::uint8_t, 16> bits{};
    std::vector<std::uint8_t> values;

    bool operator==(const HuffmanSpec& o) const { return bits == o.bits && values == o.values; }
};

// Annex K.3 typical Huffman tables.
const HuffmanSpec& typical_dc_luma();
const HuffmanSpec& typical_dc_chroma();
const HuffmanSpec& typical_ac_luma();
const HuffmanSpec& typical_ac_chroma();

// True if spec matches one of the two typical tables of its class.
bool matches_typical(const HuffmanSpec& spec, bool is_ac);

}  // namespace chainrec::jpeg
