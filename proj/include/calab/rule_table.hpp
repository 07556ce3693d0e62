#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace calab {

inline constexpr int kRadius = 3;
inline constexpr int kNeighborhood = 2 * kRadius + 1;
inline constexpr std::size_t kRuleEntries = std::size_t{1} << kNeighborhood;  // 128
inline constexpr std::size_t kHexDigits = kRuleEntries / 4;                     // 32

// Raised for malformed rule strings. position() is the zero-based offending
// character index, or the string length when the length itself is wrong.
class FormatError : public std::invalid_argument {
public:
    FormatError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Lookup table of a radius-3 binary rule. Entry n is the next state of a cell
// whose neighborhood (x-3 ... x+3, leftmost cell most significant) packs to n.
class RuleTable {
public:
    constexpr RuleTable() = default;

    static RuleTable zeros() { return RuleTable{}; }
    static RuleTable ones();
    // outputs[n] = bit 3 of n; stepping with it is the identity map.
    static RuleTable center_projection();

    bool output(std::size_t n) const { return (words_[n >> 6] >> (n & 63)) & 1u; }
    void set(std::size_t n, bool value);
    void flip(std::size_t n) { words_[n >> 6] ^= std::uint64_t{1} << (n & 63); }

    // Bit n of the 128-bit genome lives in words()[n / 64], bit n % 64.
    const std::array<std::uint64_t, 2>& words() const { return words_; }

    std::size_t count_ones() const;

    friend bool operator==(const RuleTable&, const RuleTable&) = default;

private:
    std::array<std::uint64_t, 2> words_{};
};

std::size_t hamming_distance(const RuleTable& a, const RuleTable& b);

// Each hex digit expands to four bits, most significant first; the resulting
// 128-character bit string is read left to right as outputs[0..127].
RuleTable parse_hex(std::string_view hex);
std::string format_hex(const RuleTable& rule);

}  // namespace calab
