#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "pcc/code.hpp"
#include "pcc/errors.hpp"
#include "test_support.hpp"

using namespace pcc;

TEST_CASE("code parameters") {
    const CodeParams p(8);
    CHECK(p.n() == 8);
    CHECK(p.k() == 7);
    CHECK(p.rate() == doctest::Approx(7.0 / 8.0));
    CHECK(p.d_min() == 2);
    CHECK(p.t() == 0);

    CHECK_THROWS_AS(CodeParams(1), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams(0), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams(65), CapacityError);
    CHECK_NOTHROW(CodeParams(64));
}

TEST_CASE("encode appends an even-parity bit") {
    CHECK(encode(BitBlock::from_bits({1, 0, 1})) == BitBlock::from_bits({1, 0, 1, 0}));
    CHECK(encode(BitBlock::from_bits({1, 1, 0})) == BitBlock::from_bits({1, 1, 0, 0}));
    CHECK(encode(BitBlock::from_bits({1, 0, 0})) == BitBlock::from_bits({1, 0, 0, 1}));
    CHECK_THROWS_AS(encode(BitBlock()), std::invalid_argument);
}

TEST_CASE("parity check") {
    CHECK(parity_ok(BitBlock::from_bits({1, 0, 1, 0})));
    CHECK_FALSE(parity_ok(BitBlock::from_bits({1, 0, 0, 0})));
    CHECK(parity_ok(BitBlock(8))); // zero codeword
    CHECK_THROWS_AS(parity_ok(BitBlock::from_bits({1})), std::invalid_argument);
    CHECK_THROWS_AS(parity_ok(BitBlock()), std::invalid_argument);
}

TEST_CASE("generator and parity-check matrices") {
    const CodeParams p3(3);
    const auto g3 = generator_matrix(p3);
    REQUIRE(g3.size() == 2);
    CHECK(g3[0] == BitBlock::from_bits({1, 0, 1}));
    CHECK(g3[1] == BitBlock::from_bits({0, 1, 1}));
    CHECK(parity_check_matrix(p3) == BitBlock::from_bits({1, 1, 1}));

    const CodeParams p2(2);
    const auto g2 = generator_matrix(p2);
    REQUIRE(g2.size() == 1);
    CHECK(g2[0] == BitBlock::from_bits({1, 1}));
    CHECK(parity_check_matrix(p2) == BitBlock::from_bits({1, 1}));

    // G * H^T = 0 over GF(2) for every supported length
    for (int n = 2; n <= 64; ++n) {
        const CodeParams p(n);
        const BitBlock h = parity_check_matrix(p);
        for (const auto& row : generator_matrix(p)) CHECK(test::gf2_dot(row, h) == 0);
    }
}

TEST_CASE("systematic encoding, exhaustive for k <= 12") {
    for (int k = 1; k <= 12; ++k) {
        int min_weight = 1 << 30;
        for (std::uint64_t d = 0; d < (std::uint64_t{1} << k); ++d) {
            const BitBlock data = BitBlock::from_word(d, k);
            const BitBlock codeword = encode(data);
            CHECK(parity_ok(codeword));
            CHECK(codeword.prefix(k) == data);
            if (d != 0) min_weight = std::min(min_weight, codeword.weight());
        }
        CHECK(min_weight == 2);
    }
}

TEST_CASE("systematic encoding, randomized for larger k") {
    Rng rng(2024);
    for (int trial = 0; trial < 4000; ++trial) {
        const int k = 13 + static_cast<int>(rng.next_u64() % 51); // up to 63
        const BitBlock data = test::random_data_word(rng, k);
        const BitBlock codeword = encode(data);
        CHECK(codeword.size() == k + 1);
        CHECK(parity_ok(codeword));
        CHECK(codeword.prefix(k) == data);
    }
}

TEST_CASE("bit block basics") {
    BitBlock b(4);
    b.set_bit(2, 1);
    CHECK(b.to_vector() == std::vector<int>{0, 0, 1, 0});
    CHECK(b.weight() == 1);
    b.flip_bit(2);
    CHECK(b.weight() == 0);
    CHECK_THROWS_AS(b.set_bit(4, 1), std::out_of_range);
    CHECK_THROWS_AS(b.set_bit(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(BitBlock(65), std::invalid_argument);
    CHECK_THROWS_AS(BitBlock::from_bits({0, 2}), std::invalid_argument);
    CHECK(BitBlock::from_word(0b1011, 4).to_vector() == std::vector<int>{1, 1, 0, 1});
}
