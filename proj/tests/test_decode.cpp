#include "decisum/decode.hpp"
#include "decisum/errors.hpp"
#include "decisum/oracle.hpp"

#include <doctest.h>

#include <random>

using decisum::Checksum;

TEST_CASE("crc8 check value") {
    CHECK(decisum::crc8_bytes("123456789") == 0xF4);
    CHECK(decisum::crc8_bytes("") == 0x00);

    std::vector<std::uint8_t> bits;
    for (char ch : std::string("123456789")) {
        for (int k = 7; k >= 0; --k) {
            bits.push_back(static_cast<std::uint8_t>((static_cast<unsigned char>(ch) >> k) & 1U));
        }
    }
    CHECK(decisum::crc8(bits) == 0xF4);
}

TEST_CASE("appended checksums validate and single flips are caught") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint8_t> msg(16);
        for (auto& b : msg) {
            b = static_cast<std::uint8_t>(rng() & 1U);
        }
        for (Checksum kind : {Checksum::ParityEven, Checksum::Crc8}) {
            auto word = decisum::append_checksum(kind, msg);
            CHECK(decisum::passes(kind, word));
            word[rng() % word.size()] ^= 1U;
            CHECK_FALSE(decisum::passes(kind, word));
        }
    }
    CHECK(decisum::passes(Checksum::None, std::vector<std::uint8_t>{1, 0, 1}));
    CHECK(decisum::passes(Checksum::ParityEven, std::vector<std::uint8_t>{1, 0, 1}));
    CHECK_FALSE(decisum::passes(Checksum::ParityEven, std::vector<std::uint8_t>{1, 0, 0}));
}

TEST_CASE("checksum shape") {
    CHECK_THROWS_AS(decisum::check_checksum_shape(Checksum::Crc8, 8), decisum::LengthMismatch);
    CHECK_NOTHROW(decisum::check_checksum_shape(Checksum::Crc8, 9));
    CHECK_THROWS_AS(decisum::check_checksum_shape(Checksum::ParityEven, 0), decisum::LengthMismatch);
    CHECK_THROWS_AS(decisum::decode({{0.1, 0.9}}, Checksum::Crc8, 10), decisum::LengthMismatch);
}

const decisum::ConfidenceSequence kConf{{0.1, 0.9}, {0.8, 0.2}, {0.6, 0.4}};

TEST_CASE("decode without checksum picks the per-bit argmax") {
    const auto r = decisum::decode(kConf, Checksum::None, 10);
    CHECK(r.found);
    CHECK(r.rank == 1);
    CHECK(r.tested == 1);
    CHECK(r.bits == std::vector<std::uint8_t>{1, 0, 0});
    CHECK(r.confidence == doctest::Approx(2.3));

    // equal confidences resolve to bit value 0
    const auto tie = decisum::decode({{0.5, 0.5}, {0.2, 0.7}}, Checksum::None, 1);
    CHECK(tie.bits == std::vector<std::uint8_t>{0, 1});
}

TEST_CASE("decode with parity matches the oracle ranking") {
    const auto r = decisum::decode(kConf, Checksum::ParityEven, 10);
    CHECK(r.found);
    CHECK(r.rank == 2);
    CHECK(r.tested == 2);
    CHECK(r.bits == std::vector<std::uint8_t>{1, 0, 1});
    CHECK(r.confidence == doctest::Approx(2.1));
}

TEST_CASE("decode gives up after max candidates") {
    // argmax 111 has odd parity
    const decisum::ConfidenceSequence conf(3, {0.2, 0.9});
    const auto r = decisum::decode(conf, Checksum::ParityEven, 1);
    CHECK_FALSE(r.found);
    CHECK(r.tested == 1);
    CHECK(r.rank == 0);

    const auto more = decisum::decode(conf, Checksum::ParityEven, 2);
    CHECK(more.found);
    CHECK(more.rank == 2);
}

TEST_CASE("decode rank equals oracle rank for random parity words") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 10;
        decisum::ConfidenceSequence conf(n);
        for (auto& c : conf) {
            c = {u(rng), u(rng)};
        }
        const auto r = decisum::decode(conf, Checksum::ParityEven, 1u << 12);
        const auto o = decisum::oracle::brute_force_first_match(
            conf, decisum::Direction::Max, [](auto bits) { return decisum::passes(Checksum::ParityEven, bits); });
        REQUIRE(o);
        CHECK(r.rank == o->rank);
        CHECK(r.bits == o->selection);
    }
}
