#include "decisum/combination.hpp"

#include "decisum/errors.hpp"

#include <bit>

namespace decisum {

Combination Combination::from_string(std::string_view bits) {
    Combination c(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            c.set(i);
        } else if (bits[i] != '0') {
            throw ParseError("combination string may only contain '0' and '1'");
        }
    }
    return c;
}

Combination Combination::from_bits(std::span<const std::uint8_t> bits) {
    Combination c(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0) {
            c.set(i);
        }
    }
    return c;
}

void Combination::set(std::size_t pos) {
    if (pos >= size_) {
        throw IndexOutOfRange("bit position " + std::to_string(pos) + " outside combination of length " +
                              std::to_string(size_));
    }
    const std::size_t w = pos / word_bits;
    if (w >= words_.size()) {
        words_.resize(w + 1, 0);
    }
    const Word mask = Word{1} << (pos % word_bits);
    if ((words_[w] & mask) == 0) {
        words_[w] |= mask;
        ++popcount_;
    }
}

void Combination::reset(std::size_t pos) {
    if (pos >= size_) {
        throw IndexOutOfRange("bit position " + std::to_string(pos) + " outside combination of length " +
                              std::to_string(size_));
    }
    const std::size_t w = pos / word_bits;
    if (w >= words_.size()) {
        return;
    }
    const Word mask = Word{1} << (pos % word_bits);
    if ((words_[w] & mask) != 0) {
        words_[w] &= ~mask;
        --popcount_;
        trim();
    }
}

void Combination::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

std::vector<std::uint8_t> Combination::to_bits() const {
    std::vector<std::uint8_t> out(size_, 0);
    for_each_set_bit([&](std::size_t p) { out[p] = 1; });
    return out;
}

std::string Combination::to_string() const {
    std::string out(size_, '0');
    for_each_set_bit([&](std::size_t p) { out[p] = '1'; });
    return out;
}

std::size_t Combination::hash() const noexcept {
    // splitmix64 finalizer folded over the stored blocks
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
    for (Word w : words_) {
        std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        h ^= z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
}

bool lex_less(const Combination& a, const Combination& b) noexcept {
    const auto wa = a.words();
    const auto wb = b.words();
    const std::size_t n = std::max(wa.size(), wb.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Combination::Word x = i < wa.size() ? wa[i] : 0;
        const Combination::Word y = i < wb.size() ? wb[i] : 0;
        if (x != y) {
            // first differing position decides; the side holding 0 there is smaller
            const int first = std::countr_zero(x ^ y);
            return ((x >> first) & 1U) == 0;
        }
    }
    return a.size() < b.size();
}

Combination shift(const Combination& combo, std::size_t position) {
    if (position >= combo.size()) {
        throw IndexOutOfRange("shift position " + std::to_string(position) + " outside combination of length " +
                              std::to_string(combo.size()));
    }
    Combination out = combo;
    if (position == 0) {
        out.set(0);
    } else if (combo.test(position - 1) && !combo.test(position)) {
        out.reset(position - 1);
        out.set(position);
    }
    return out;
}

std::vector<std::size_t> successor_moves(const Combination& combo) {
    std::vector<std::size_t> moves;
    const std::size_t n = combo.size();
    if (n == 0) {
        return moves;
    }
    if (!combo.test(0)) {
        moves.push_back(0);
    }
    combo.for_each_set_bit([&](std::size_t p) {
        if (p + 1 < n && !combo.test(p + 1)) {
            moves.push_back(p + 1);
        }
    });
    return moves;
}

std::vector<Combination> successors(const Combination& combo) {
    std::vector<Combination> out;
    for (std::size_t move : successor_moves(combo)) {
        out.push_back(shift(combo, move));
    }
    return out;
}

} // namespace decisum
