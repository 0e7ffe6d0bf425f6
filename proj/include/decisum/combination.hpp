#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace decisum {

/// N-bit choice vector in the delta-sorted domain.
///
/// Bits are packed into 64-bit blocks. Trailing all-zero blocks are never
/// stored, so a combination whose set bits sit among the first few hundred
/// positions costs a handful of words even when N is in the millions.
/// Equality and hashing look at bit content (and length) only.
class Combination {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Combination() = default;
    explicit Combination(std::size_t size) : size_(size) {}

    /// Parses a string of '0'/'1' characters; position 0 is the first char.
    static Combination from_string(std::string_view bits);
    static Combination from_bits(std::span<const std::uint8_t> bits);

    std::size_t size() const noexcept { return size_; }
    std::size_t popcount() const noexcept { return popcount_; }
    bool none() const noexcept { return popcount_ == 0; }

    bool test(std::size_t pos) const noexcept {
        const std::size_t w = pos / word_bits;
        return w < words_.size() && ((words_[w] >> (pos % word_bits)) & 1U) != 0;
    }

    void set(std::size_t pos);
    void reset(std::size_t pos);

    /// Stored blocks; blocks past the end of this span are implicitly zero.
    std::span<const Word> words() const noexcept { return words_; }

    /// Calls fn(pos) for every set bit in ascending position order.
    template <typename Fn>
    void for_each_set_bit(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                const auto b = static_cast<std::size_t>(__builtin_ctzll(bits));
                fn(w * word_bits + b);
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::uint8_t> to_bits() const;
    std::string to_string() const;
    std::size_t hash() const noexcept;

    friend bool operator==(const Combination& a, const Combination& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    void trim() noexcept;

    std::size_t size_ = 0;
    std::size_t popcount_ = 0;
    std::vector<Word> words_;
};

/// Lexicographic order with position 0 as the most significant bit.
bool lex_less(const Combination& a, const Combination& b) noexcept;

struct CombinationHash {
    std::size_t operator()(const Combination& c) const noexcept { return c.hash(); }
};

/// Shift operator. Position 0 sets the first bit; position p > 0 moves a
/// one-bit from p-1 to p. Any other case returns the input unchanged.
/// Positions are zero-based.
Combination shift(const Combination& combo, std::size_t position);

/// Positions p for which shift(combo, p) differs from combo, ascending.
std::vector<std::size_t> successor_moves(const Combination& combo);

/// Every distinct combination one shift away from combo.
std::vector<Combination> successors(const Combination& combo);

/// Largest possible successor count for length n, i.e. ceil(n / 2).
constexpr std::size_t successor_bound(std::size_t n) noexcept { return (n + 1) / 2; }

} // namespace decisum

template <>
struct std::hash<decisum::Combination> {
    std::size_t operator()(const decisum::Combination& c) const noexcept { return c.hash(); }
};
