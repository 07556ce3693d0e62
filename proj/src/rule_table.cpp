#include "calab/rule_table.hpp"

#include <bit>

namespace calab {

RuleTable RuleTable::ones() {
    RuleTable r;
    r.words_ = {~std::uint64_t{0}, ~std::uint64_t{0}};
    return r;
}

RuleTable RuleTable::center_projection() {
    RuleTable r;
    for (std::size_t n = 0; n < kRuleEntries; ++n) r.set(n, (n >> kRadius) & 1u);
    return r;
}

void RuleTable::set(std::size_t n, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (n & 63);
    if (value)
        words_[n >> 6] |= mask;
    else
        words_[n >> 6] &= ~mask;
}

std::size_t RuleTable::count_ones() const {
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
}

std::size_t hamming_distance(const RuleTable& a, const RuleTable& b) {
    return static_cast<std::size_t>(std::popcount(a.words()[0] ^ b.words()[0]) +
                                    std::popcount(a.words()[1] ^ b.words()[1]));
}

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

RuleTable parse_hex(std::string_view hex) {
    if (hex.size() != kHexDigits)
        throw FormatError("rule must have exactly 32 hex digits, got " +
                              std::to_string(hex.size()),
                          hex.size());
    RuleTable rule;
    for (std::size_t i = 0; i < kHexDigits; ++i) {
        const int digit = hex_value(hex[i]);
        if (digit < 0)
            throw FormatError("invalid hex digit '" + std::string(1, hex[i]) +
                                  "' at position " + std::to_string(i),
                              i);
        for (int j = 0; j < 4; ++j) rule.set(4 * i + j, (digit >> (3 - j)) & 1);
    }
    return rule;
}

std::string format_hex(const RuleTable& rule) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string out(kHexDigits, '0');
    for (std::size_t i = 0; i < kHexDigits; ++i) {
        int digit = 0;
        for (int j = 0; j < 4; ++j) digit = (digit << 1) | (rule.output(4 * i + j) ? 1 : 0);
        out[i] = kDigits[digit];
    }
    return out;
}

}  // namespace calab
