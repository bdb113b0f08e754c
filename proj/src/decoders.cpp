#include "pcc/decoders.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pcc/errors.hpp"
#include "pcc/rng.hpp"

namespace pcc {

std::string decoder_name(Decoder d) {
    switch (d) {
        case Decoder::hard: return "hard";
        case Decoder::flip: return "flip";
        case Decoder::soft_ml: return "soft";
    }
    throw std::invalid_argument("decoder_name: unknown decoder");
}

Decoder decoder_from_name(const std::string& name) {
    if (name == "hard") return Decoder::hard;
    if (name == "flip") return Decoder::flip;
    if (name == "soft" || name == "soft_ml") return Decoder::soft_ml;
    throw std::invalid_argument("unknown decoder '" + name + "' (expected hard, flip or soft)");
}

BitBlock hard_decide(std::span<const double> r) {
    const int n = static_cast<int>(r.size());
    BitBlock word(n);
    for (int i = 0; i < n; ++i)
        if (r[static_cast<std::size_t>(i)] < 0.0) word.set_bit(i, 1);
    return word;
}

BitBlock hard_decide(const ChannelObservation& obs) { return hard_decide(obs.r); }

namespace {

void check_observation(std::span<const double> r, std::span<const double> h) {
    if (r.size() != h.size())
        throw std::invalid_argument("decoder: r and h lengths differ");
    if (r.size() < 2)
        throw std::invalid_argument("decoder: observation must have at least 2 symbols");
    for (double hi : h)
        if (!(hi > 0.0)) throw std::invalid_argument("decoder: CSI magnitudes must be > 0");
}

} // namespace

DecodeResult flip_decode(std::span<const double> r, std::span<const double> h) {
    check_observation(r, h);
    BitBlock word = hard_decide(r);
    if (parity_ok(word)) return {word, std::nullopt};
    const auto weakest = std::min_element(h.begin(), h.end()); // first minimum on ties
    const int index = static_cast<int>(weakest - h.begin());
    word.flip_bit(index);
    return {word, index};
}

DecodeResult flip_decode(const ChannelObservation& obs) { return flip_decode(obs.r, obs.h); }

DecodeResult wagner_decode(std::span<const double> r, std::span<const double> h) {
    check_observation(r, h);
    BitBlock word = hard_decide(r);
    if (parity_ok(word)) return {word, std::nullopt};
    int index = 0;
    double least = std::abs(h[0] * r[0]);
    for (std::size_t i = 1; i < r.size(); ++i) {
        const double reliability = std::abs(h[i] * r[i]);
        if (reliability < least) {
            least = reliability;
            index = static_cast<int>(i);
        }
    }
    word.flip_bit(index);
    return {word, std::nullopt};
}

DecodeResult soft_ml_decode(std::span<const double> r, std::span<const double> h,
                            int max_block_length) {
    check_observation(r, h);
    const int n = static_cast<int>(r.size());
    if (n > max_block_length)
        throw CapacityError("soft_ml_decode: n = " + std::to_string(n) +
                            " exceeds the brute-force cap of " +
                            std::to_string(max_block_length));
    const int k = n - 1;

    // Correlation contribution of each symbol under the current hypothesis;
    // start at the all-zero codeword (all symbols +1).
    std::vector<double> contrib(static_cast<std::size_t>(n));
    double metric = 0.0;
    for (int i = 0; i < n; ++i) {
        contrib[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)] *
                                               r[static_cast<std::size_t>(i)];
        metric += contrib[static_cast<std::size_t>(i)];
    }

    // Gray walk over all 2^k data words. The Gray value doubles as the
    // lexicographic index of the data word (bit j of the value = data bit
    // k-1-j), which is what tie-breaking is defined on.
    std::uint64_t best_index = 0;
    double best_metric = metric;
    std::uint64_t gray = 0;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t step = 1; step < total; ++step) {
        const int changed = std::countr_zero(step);
        gray ^= std::uint64_t{1} << changed;
        const int data_pos = k - 1 - changed;
        metric -= 2.0 * (contrib[static_cast<std::size_t>(data_pos)] +
                         contrib[static_cast<std::size_t>(k)]);
        contrib[static_cast<std::size_t>(data_pos)] = -contrib[static_cast<std::size_t>(data_pos)];
        contrib[static_cast<std::size_t>(k)] = -contrib[static_cast<std::size_t>(k)];
        if (metric > best_metric || (metric == best_metric && gray < best_index)) {
            best_metric = metric;
            best_index = gray;
        }
    }

    BitBlock data(k);
    for (int i = 0; i < k; ++i)
        data.set_bit(i, static_cast<int>((best_index >> (k - 1 - i)) & 1));
    return {encode(data), std::nullopt};
}

DecodeResult soft_ml_decode(const ChannelObservation& obs, const CodeParams& params,
                            int max_block_length) {
    if (obs.size() != params.n())
        throw std::invalid_argument("soft_ml_decode: observation length does not match n");
    return soft_ml_decode(obs.r, obs.h, max_block_length);
}

namespace {

volatile std::uint64_t g_probe_sink = 0;

} // namespace

double decode_throughput_probe(Decoder decoder, int n, long long trials) {
    if (trials < 10000)
        throw std::invalid_argument("decode_throughput_probe: trials must be >= 10000");
    const CodeParams params(n);
    const SnrPoint snr = SnrPoint::from_db(10.0, params);

    // Pre-generate a pool of observations so only decoding is timed.
    const int pool = 512;
    std::vector<double> r(static_cast<std::size_t>(pool) * n);
    std::vector<double> h(static_cast<std::size_t>(pool) * n);
    Rng rng(derive_seed(0xC0FFEEULL, n, static_cast<int>(decoder)));
    for (int b = 0; b < pool; ++b) {
        BitBlock data(params.k());
        for (int i = 0; i < params.k(); ++i) data.set_bit(i, static_cast<int>(rng.next_u64() & 1));
        const ChannelObservation obs = transmit(encode(data), snr, rng);
        std::copy(obs.r.begin(), obs.r.end(), r.begin() + static_cast<std::ptrdiff_t>(b) * n);
        std::copy(obs.h.begin(), obs.h.end(), h.begin() + static_cast<std::ptrdiff_t>(b) * n);
    }

    const int reps = 7;
    std::vector<double> samples;
    samples.reserve(reps);
    std::uint64_t sink = 0;
    for (int rep = 0; rep < reps; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        for (long long t = 0; t < trials; ++t) {
            const std::size_t at = static_cast<std::size_t>(t % pool) * n;
            std::span<const double> rb(&r[at], static_cast<std::size_t>(n));
            std::span<const double> hb(&h[at], static_cast<std::size_t>(n));
            switch (decoder) {
                case Decoder::hard: sink += hard_decide(rb).word(); break;
                case Decoder::flip: sink += flip_decode(rb, hb).codeword_estimate.word(); break;
                case Decoder::soft_ml:
                    sink += soft_ml_decode(rb, hb).codeword_estimate.word();
                    break;
            }
        }
        const auto t1 = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() /
                          static_cast<double>(trials));
    }
    g_probe_sink = sink;
    std::nth_element(samples.begin(), samples.begin() + reps / 2, samples.end());
    return samples[reps / 2];
}

} // namespace pcc
