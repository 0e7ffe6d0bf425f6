#pragma once

#include "decisum/problem.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace decisum {

/// Per-bit confidences (conf0, conf1) for bit values 0 and 1.
using ConfidenceSequence = std::vector<std::pair<double, double>>;

enum class Checksum { None, ParityEven, Crc8 };

/// Number of trailing bits occupied by the checksum.
constexpr std::size_t checksum_width(Checksum kind) noexcept { return kind == Checksum::Crc8 ? 8 : 0; }

/// CRC-8, polynomial 0x07, init 0x00, no reflection, no final xor.
/// Bits are consumed in order; bytes are fed most-significant bit first.
std::uint8_t crc8(std::span<const std::uint8_t> bits);
std::uint8_t crc8_bytes(std::string_view bytes);

/// Throws LengthMismatch when a length-n bit string cannot carry the checksum.
void check_checksum_shape(Checksum kind, std::size_t n);

/// Parity: even number of ones overall. CRC-8: the last 8 bits (MSB first)
/// equal the CRC of the preceding bits.
bool passes(Checksum kind, std::span<const std::uint8_t> bits);

/// Appends the checksum that makes message pass. None returns message as is.
std::vector<std::uint8_t> append_checksum(Checksum kind, std::span<const std::uint8_t> message);

struct DecodeResult {
    bool found = false;
    std::uint64_t rank = 0;       ///< rank of the accepted candidate, 0 if none
    std::vector<std::uint8_t> bits;
    double confidence = 0.0;
    std::uint64_t tested = 0;
};

/// Tests candidate bit strings in decreasing total-confidence order and stops
/// at the first one the checksum accepts, or after max_candidates.
DecodeResult decode(const ConfidenceSequence& confidences, Checksum kind, std::uint64_t max_candidates);

} // namespace decisum
