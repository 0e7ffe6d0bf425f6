#include "decisum/decode.hpp"

#include "decisum/enumerator.hpp"
#include "decisum/errors.hpp"

#include <memory>
#include <string>

namespace decisum {
namespace {

std::uint8_t crc8_step(std::uint8_t crc, bool bit) {
    crc ^= static_cast<std::uint8_t>(bit ? 0x80U : 0U);
    return (crc & 0x80U) != 0 ? static_cast<std::uint8_t>((crc << 1) ^ 0x07U) : static_cast<std::uint8_t>(crc << 1);
}

} // namespace

std::uint8_t crc8(std::span<const std::uint8_t> bits) {
    std::uint8_t crc = 0;
    for (std::uint8_t b : bits) {
        crc = crc8_step(crc, b != 0);
    }
    return crc;
}

std::uint8_t crc8_bytes(std::string_view bytes) {
    std::uint8_t crc = 0;
    for (char ch : bytes) {
        const auto byte = static_cast<std::uint8_t>(ch);
        for (int k = 7; k >= 0; --k) {
            crc = crc8_step(crc, ((byte >> k) & 1U) != 0);
        }
    }
    return crc;
}

void check_checksum_shape(Checksum kind, std::size_t n) {
    if (n == 0) {
        throw LengthMismatch("bit string must not be empty");
    }
    if (kind == Checksum::Crc8 && n <= 8) {
        throw LengthMismatch("crc8 needs more than 8 bits, got " + std::to_string(n));
    }
}

bool passes(Checksum kind, std::span<const std::uint8_t> bits) {
    switch (kind) {
    case Checksum::None:
        return true;
    case Checksum::ParityEven: {
        std::size_t ones = 0;
        for (std::uint8_t b : bits) {
            ones += b != 0 ? 1 : 0;
        }
        return ones % 2 == 0;
    }
    case Checksum::Crc8: {
        if (bits.size() <= 8) {
            return false;
        }
        const auto message = bits.first(bits.size() - 8);
        std::uint8_t stored = 0;
        for (std::uint8_t b : bits.last(8)) {
            stored = static_cast<std::uint8_t>((stored << 1) | (b != 0 ? 1U : 0U));
        }
        return crc8(message) == stored;
    }
    }
    return false;
}

std::vector<std::uint8_t> append_checksum(Checksum kind, std::span<const std::uint8_t> message) {
    std::vector<std::uint8_t> out(message.begin(), message.end());
    if (kind == Checksum::ParityEven) {
        std::size_t ones = 0;
        for (std::uint8_t b : message) {
            ones += b != 0 ? 1 : 0;
        }
        out.push_back(static_cast<std::uint8_t>(ones % 2));
    } else if (kind == Checksum::Crc8) {
        const std::uint8_t crc = crc8(message);
        for (int k = 7; k >= 0; --k) {
            out.push_back(static_cast<std::uint8_t>((crc >> k) & 1U));
        }
    }
    return out;
}

DecodeResult decode(const ConfidenceSequence& confidences, Checksum kind, std::uint64_t max_candidates) {
    check_checksum_shape(kind, confidences.size());
    auto instance = std::make_shared<const ProblemInstance>(ProblemInstance::normalize(confidences, Direction::Max));
    Enumerator candidates(instance);

    DecodeResult result;
    while (result.tested < max_candidates) {
        auto next = candidates.next_ranked();
        if (!next) {
            break;
        }
        ++result.tested;
        if (passes(kind, next->selection)) {
            result.found = true;
            result.rank = next->rank;
            result.bits = std::move(next->selection);
            result.confidence = next->sum;
            break;
        }
    }
    return result;
}

} // namespace decisum
