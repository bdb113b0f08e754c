#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "pcc/decoders.hpp"
#include "pcc/errors.hpp"
#include "test_support.hpp"

using namespace pcc;

namespace {

ChannelObservation random_observation(Rng& rng, int n, double gamma_b_db = 4.0) {
    const CodeParams params(n);
    const SnrPoint snr = SnrPoint::from_db(gamma_b_db, params);
    return transmit(encode(test::random_data_word(rng, params.k())), snr, rng);
}

// Independent ML oracle: enumerate every even-weight word of length n and
// minimize the squared Euclidean distance to the faded constellation.
BitBlock exhaustive_min_distance(const ChannelObservation& obs) {
    const int n = obs.size();
    double best = 1e300;
    std::uint64_t best_word = 0;
    bool found = false;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
        if (std::popcount(w) % 2 != 0) continue;
        double dist = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = ((w >> i) & 1) ? -1.0 : 1.0;
            const double d = obs.r[static_cast<std::size_t>(i)] -
                             obs.h[static_cast<std::size_t>(i)] * x;
            dist += d * d;
        }
        if (!found || dist < best) {
            found = true;
            best = dist;
            best_word = w;
        }
    }
    return BitBlock::from_word(best_word, n);
}

} // namespace

TEST_CASE("hard decision reads symbol signs, ties to 0") {
    const std::vector<double> positive{0.4, 1.0, 2.2, 0.1};
    CHECK(hard_decide(positive) == BitBlock(4));
    const std::vector<double> mixed{-0.3, 0.2, 0.1, -0.4};
    CHECK(hard_decide(mixed) == BitBlock::from_bits({1, 0, 0, 1}));
    const std::vector<double> tie{0.0, -1.0};
    CHECK(hard_decide(tie) == BitBlock::from_bits({0, 1}));
}

TEST_CASE("flip decoding: passthrough, correction, tie rule") {
    // parity already even: untouched, no flip recorded
    const std::vector<double> r_ok{-1, 1, -1, 1};
    const std::vector<double> h{0.9, 0.2, 1.1, 0.7};
    const DecodeResult ok = flip_decode(r_ok, h);
    CHECK(ok.codeword_estimate == BitBlock::from_bits({1, 0, 1, 0}));
    CHECK_FALSE(ok.flipped_index.has_value());

    // parity fails: flip the weakest position (index 1, i.e. 2nd symbol)
    const std::vector<double> r_bad{-1, 0.5, 0.5, 0.5};
    const DecodeResult fixed = flip_decode(r_bad, h);
    CHECK(fixed.codeword_estimate == BitBlock::from_bits({1, 1, 0, 0}));
    REQUIRE(fixed.flipped_index.has_value());
    CHECK(*fixed.flipped_index == 1);
    CHECK(fixed.data_estimate() == BitBlock::from_bits({1, 1, 0}));

    // exact CSI tie: smallest index wins
    const std::vector<double> h_tie{0.2, 0.2, 1.1, 0.7};
    const DecodeResult tied = flip_decode(r_bad, h_tie);
    REQUIRE(tied.flipped_index.has_value());
    CHECK(*tied.flipped_index == 0);

    CHECK_THROWS_AS(flip_decode(std::vector<double>{1.0}, std::vector<double>{1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(flip_decode(r_ok, std::vector<double>{0.9, 0.0, 1.1, 0.7}),
                    std::invalid_argument);
}

TEST_CASE("flip decoding properties under fuzz") {
    Rng rng(4242);
    for (int trial = 0; trial < 100000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 9);
        const ChannelObservation obs = random_observation(rng, n);
        const BitBlock hard = hard_decide(obs);
        const DecodeResult res = flip_decode(obs);

        CHECK(parity_ok(res.codeword_estimate));
        const std::uint64_t diff = res.codeword_estimate.word() ^ hard.word();
        if (parity_ok(hard)) {
            CHECK(diff == 0);
            CHECK_FALSE(res.flipped_index.has_value());
        } else {
            CHECK(std::popcount(diff) == 1);
            REQUIRE(res.flipped_index.has_value());
            const auto weakest = std::min_element(obs.h.begin(), obs.h.end());
            CHECK(*res.flipped_index == static_cast<int>(weakest - obs.h.begin()));
        }

        // invariant under positive rescaling of the CSI vector
        if (trial % 16 == 0) {
            for (double scale : {1e-6, 3.0, 1e6}) {
                std::vector<double> scaled(obs.h);
                for (double& v : scaled) v *= scale;
                const DecodeResult rescaled = flip_decode(obs.r, scaled);
                CHECK(rescaled.codeword_estimate == res.codeword_estimate);
                CHECK(rescaled.flipped_index == res.flipped_index);
            }
        }
    }
}

TEST_CASE("soft ML equals the exhaustive squared-distance oracle (n = 4)") {
    Rng rng(31337);
    for (int trial = 0; trial < 10000; ++trial) {
        const ChannelObservation obs = random_observation(rng, 4);
        const DecodeResult ml = soft_ml_decode(obs, CodeParams(4));
        CHECK(ml.codeword_estimate == exhaustive_min_distance(obs));
        CHECK(parity_ok(ml.codeword_estimate));
    }
}

TEST_CASE("soft ML across lengths: valid codeword, metric optimality, noiseless exactness") {
    Rng rng(999);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 7);
        const CodeParams params(n);
        const BitBlock sent = encode(test::random_data_word(rng, params.k()));
        const ChannelObservation obs = transmit(sent, SnrPoint::from_db(6.0, params), rng);
        const DecodeResult ml = soft_ml_decode(obs, params);
        CHECK(parity_ok(ml.codeword_estimate));

        const auto metric = [&](const BitBlock& w) {
            double m = 0.0;
            for (int i = 0; i < n; ++i)
                m += obs.h[static_cast<std::size_t>(i)] * obs.r[static_cast<std::size_t>(i)] *
                     (w[i] ? -1.0 : 1.0);
            return m;
        };
        CHECK(metric(ml.codeword_estimate) >= metric(sent));
    }

    // noiseless: the transmitted codeword maximizes the metric
    Rng noiseless_rng(5);
    const CodeParams params(6);
    const BitBlock sent = encode(BitBlock::from_bits({1, 0, 1, 1, 0}));
    ChannelObservation obs;
    obs.gamma_c = 1.0;
    for (int i = 0; i < 6; ++i) {
        const double h = rayleigh_sample(noiseless_rng);
        obs.h.push_back(h);
        obs.r.push_back(h * (sent[i] ? -1.0 : 1.0));
    }
    CHECK(soft_ml_decode(obs, params).codeword_estimate == sent);
}

TEST_CASE("wagner rule matches brute-force soft ML") {
    Rng rng(86753);
    for (int trial = 0; trial < 100000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 9);
        const double db = static_cast<double>(rng.next_u64() % 13);
        const ChannelObservation obs = random_observation(rng, n, db);
        CHECK(wagner_decode(obs.r, obs.h).codeword_estimate ==
              soft_ml_decode(obs.r, obs.h).codeword_estimate);
    }
}

TEST_CASE("soft ML brute-force cap") {
    const std::vector<double> r(25, 1.0);
    const std::vector<double> h(25, 1.0);
    CHECK_THROWS_AS(soft_ml_decode(r, h), CapacityError);
    try {
        soft_ml_decode(r, h);
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("24") != std::string::npos);
    }
    const std::vector<double> r9(9, 1.0), h9(9, 1.0);
    CHECK_THROWS_AS(soft_ml_decode(r9, h9, 8), CapacityError);
}

TEST_CASE("throughput probe contract") {
    CHECK_THROWS_AS(decode_throughput_probe(Decoder::hard, 8, 9999), std::invalid_argument);
    CHECK(decode_throughput_probe(Decoder::hard, 8, 10000) > 0.0);
}

TEST_CASE("decoder names") {
    CHECK(decoder_name(Decoder::soft_ml) == "soft");
    CHECK(decoder_from_name("soft") == Decoder::soft_ml);
    CHECK(decoder_from_name("soft_ml") == Decoder::soft_ml);
    CHECK(decoder_from_name("hard") == Decoder::hard);
    CHECK(decoder_from_name("flip") == Decoder::flip);
    CHECK_THROWS_AS(decoder_from_name("viterbi"), std::invalid_argument);
}
