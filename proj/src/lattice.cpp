#include "calab/lattice.hpp"

#include <bit>
#include <stdexcept>

namespace calab {

Lattice::Lattice(std::size_t n_cells) : n_(n_cells), words_(words_for(n_cells), 0) {
    if (n_cells == 0) throw std::invalid_argument("lattice must have at least one cell");
}

Lattice Lattice::from_string(std::string_view cells) {
    Lattice l(cells.size());
    for (std::size_t x = 0; x < cells.size(); ++x) {
        if (cells[x] == '1')
            l.set(x, true);
        else if (cells[x] != '0')
            throw std::invalid_argument("lattice string may only contain '0' and '1' (position " +
                                        std::to_string(x) + ")");
    }
    return l;
}

Lattice Lattice::uniform(std::size_t n_cells, bool on) {
    Lattice l(n_cells);
    if (on) {
        for (auto& w : l.words_) w = ~std::uint64_t{0};
        l.clear_padding();
    }
    return l;
}

void Lattice::set(std::size_t x, bool on) {
    const std::uint64_t mask = std::uint64_t{1} << (x & 63);
    if (on)
        words_[x >> 6] |= mask;
    else
        words_[x >> 6] &= ~mask;
}

bool Lattice::get_cyclic(long long x) const {
    const auto n = static_cast<long long>(n_);
    long long r = x % n;
    if (r < 0) r += n;
    return get(static_cast<std::size_t>(r));
}

std::size_t Lattice::count_on() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t Lattice::count_on(std::size_t first, std::size_t last) const {
    if (first > last || last > n_) throw std::out_of_range("count_on range outside lattice");
    std::size_t total = 0;
    std::size_t x = first;
    while (x < last && (x & 63) != 0) total += get(x++);
    while (x + 64 <= last) {
        total += static_cast<std::size_t>(std::popcount(words_[x >> 6]));
        x += 64;
    }
    while (x < last) total += get(x++);
    return total;
}

double Lattice::density() const {
    return static_cast<double>(count_on()) / static_cast<double>(n_);
}

std::uint64_t Lattice::last_word_mask() const {
    const std::size_t tail = n_ & 63;
    return tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
}

void Lattice::clear_padding() {
    if (!words_.empty()) words_.back() &= last_word_mask();
}

bool Lattice::all_off() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

bool Lattice::all_on() const {
    for (std::size_t i = 0; i + 1 < words_.size(); ++i)
        if (words_[i] != ~std::uint64_t{0}) return false;
    return words_.back() == last_word_mask();
}

Lattice Lattice::rotated(long long k) const {
    Lattice out(n_);
    const auto n = static_cast<long long>(n_);
    long long shift = k % n;
    if (shift < 0) shift += n;
    for (std::size_t x = 0; x < n_; ++x)
        if (get(x)) out.set((x + static_cast<std::size_t>(shift)) % n_, true);
    return out;
}

std::string Lattice::to_string() const {
    std::string s(n_, '0');
    for (std::size_t x = 0; x < n_; ++x)
        if (get(x)) s[x] = '1';
    return s;
}

}  // namespace calab
