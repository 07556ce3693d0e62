#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace calab {

// Cyclic binary configuration, bit-packed 64 cells per word. Cell x lives in
// word x / 64 at bit x % 64; bits past n_cells in the last word are always 0.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(std::size_t n_cells);

    // Characters '1' are ON, '0' are OFF; anything else throws.
    static Lattice from_string(std::string_view cells);
    static Lattice uniform(std::size_t n_cells, bool on);

    std::size_t size() const { return n_; }
    bool get(std::size_t x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
    void set(std::size_t x, bool on);
    // Index taken modulo size(); negative offsets allowed.
    bool get_cyclic(long long x) const;

    std::size_t count_on() const;
    // ON cells in [first, last).
    std::size_t count_on(std::size_t first, std::size_t last) const;
    double density() const;

    bool all_on() const;
    bool all_off() const;

    // rotated(k).get((x + k) % n) == get(x).
    Lattice rotated(long long k) const;

    std::string to_string() const;

    std::span<const std::uint64_t> words() const { return words_; }
    // Direct word access for generators; call clear_padding() after writing.
    std::span<std::uint64_t> mutable_words() { return words_; }
    void clear_padding();
    std::uint64_t last_word_mask() const;

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::size_t words_for(std::size_t n_cells) { return (n_cells + 63) / 64; }

}  // namespace calab
