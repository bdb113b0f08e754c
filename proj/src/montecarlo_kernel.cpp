#include "montecarlo_kernel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

// Hot path of the Monte Carlo engine. Sampling runs in flat array passes so
// the compiler can vectorize the log/sqrt/cos/sin calls; the decode loop then
// walks the arrays block by block. This translation unit is built with
// -ffast-math (see src/CMakeLists.txt) and must stay free of NaN/Inf logic.

namespace pcc::detail {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

template <Decoder D>
ChunkStats run_blocks(int n, double sigma, long long blocks, Rng& rng, KernelWorkspace& ws) {
    const int k = n - 1;
    const std::uint64_t data_mask = (std::uint64_t{1} << k) - 1;

    int batch_blocks = std::clamp(8192 / n, 64, 2048) & ~1;
    const int max_symbols = batch_blocks * n;
    ws.h.resize(static_cast<std::size_t>(max_symbols));
    ws.noise.resize(static_cast<std::size_t>(max_symbols) + 1);
    ws.radius.resize(static_cast<std::size_t>(max_symbols) / 2 + 1);
    ws.angle.resize(static_cast<std::size_t>(max_symbols) / 2 + 1);

    ChunkStats stats;
    std::uint64_t bit_buffer = 0;
    int bits_left = 0;

    for (long long done = 0; done < blocks;) {
        const int batch = static_cast<int>(std::min<long long>(batch_blocks, blocks - done));
        const int symbols = batch * n;
        const int pairs = (symbols + 1) / 2;
        double* h = ws.h.data();
        double* noise = ws.noise.data();
        double* radius = ws.radius.data();
        double* angle = ws.angle.data();

        // Rayleigh magnitudes, E[h^2] = 1. A u == 1 draw is resampled so h > 0.
        for (int i = 0; i < symbols; ++i) {
            double u = rng.uniform_unit();
            while (u == 1.0) [[unlikely]]
                u = rng.uniform_unit();
            h[i] = u;
        }
        for (int i = 0; i < symbols; ++i) h[i] = std::sqrt(-std::log(h[i]));

        // Unit normals via Box-Muller, generated pairwise.
        for (int j = 0; j < pairs; ++j) radius[j] = rng.uniform_unit();
        for (int j = 0; j < pairs; ++j) angle[j] = rng.uniform_half_open();
        for (int j = 0; j < pairs; ++j) radius[j] = std::sqrt(-2.0 * std::log(radius[j]));
        for (int j = 0; j < pairs; ++j) angle[j] = kTwoPi * angle[j];
        for (int j = 0; j < pairs; ++j) noise[2 * j] = radius[j] * std::cos(angle[j]);
        for (int j = 0; j < pairs; ++j) noise[2 * j + 1] = radius[j] * std::sin(angle[j]);

        for (int b = 0; b < batch; ++b) {
            if (bits_left < k) {
                bit_buffer = rng.next_u64();
                bits_left = 64;
            }
            const std::uint64_t data = bit_buffer & data_mask;
            bit_buffer >>= k;
            bits_left -= k;
            const std::uint64_t sent =
                data | (static_cast<std::uint64_t>(std::popcount(data) & 1) << k);

            const double* hb = h + static_cast<std::ptrdiff_t>(b) * n;
            const double* gb = noise + static_cast<std::ptrdiff_t>(b) * n;
            std::uint64_t hard = 0;
            double least = std::numeric_limits<double>::max();
            int least_index = 0;
            for (int i = 0; i < n; ++i) {
                const double x = ((sent >> i) & 1) ? -1.0 : 1.0;
                const double sample = hb[i] * x + sigma * gb[i];
                hard |= static_cast<std::uint64_t>(sample < 0.0) << i;
                if constexpr (D == Decoder::flip) {
                    if (hb[i] < least) {
                        least = hb[i];
                        least_index = i;
                    }
                } else if constexpr (D == Decoder::soft_ml) {
                    const double reliability = hb[i] * std::abs(sample);
                    if (reliability < least) {
                        least = reliability;
                        least_index = i;
                    }
                }
            }
            if constexpr (D != Decoder::hard) {
                if (std::popcount(hard) & 1) hard ^= std::uint64_t{1} << least_index;
            }
            const std::uint64_t diff = hard ^ sent;
            stats.block_errors += diff != 0;
            stats.data_bit_errors += std::popcount(diff & data_mask);
            stats.total_bit_errors += std::popcount(diff);
        }
        done += batch;
    }
    stats.blocks = blocks;
    return stats;
}

} // namespace

ChunkStats simulate_chunk(int n, Decoder decoder, double sigma, long long blocks, Rng rng,
                          KernelWorkspace& ws) {
    switch (decoder) {
        case Decoder::hard: return run_blocks<Decoder::hard>(n, sigma, blocks, rng, ws);
        case Decoder::flip: return run_blocks<Decoder::flip>(n, sigma, blocks, rng, ws);
        case Decoder::soft_ml: return run_blocks<Decoder::soft_ml>(n, sigma, blocks, rng, ws);
    }
    return {};
}

} // namespace pcc::detail
