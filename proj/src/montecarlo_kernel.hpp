#pragma once

#include <vector>

#include "pcc/decoders.hpp"
#include "pcc/rng.hpp"

namespace pcc::detail {

struct ChunkStats {
    long long blocks = 0;
    long long block_errors = 0;
    long long data_bit_errors = 0;
    long long total_bit_errors = 0;

    void add(const ChunkStats& other) {
        blocks += other.blocks;
        block_errors += other.block_errors;
        data_bit_errors += other.data_bit_errors;
        total_bit_errors += other.total_bit_errors;
    }
};

/// Reusable per-worker scratch buffers for the batched sampling passes.
struct KernelWorkspace {
    std::vector<double> h;      ///< fading magnitudes, one per symbol
    std::vector<double> noise;  ///< unit normals, one per symbol
    std::vector<double> radius; ///< Box-Muller radii
    std::vector<double> angle;  ///< Box-Muller angles
};

/// Simulates `blocks` transmissions of random data words at noise deviation
/// `sigma` and decodes them. Decoder::soft_ml runs the Wagner rule (same
/// codeword as the brute-force ML search, O(n) per block). Consumes the rng
/// by value: a chunk is a self-contained substream.
ChunkStats simulate_chunk(int n, Decoder decoder, double sigma, long long blocks, Rng rng,
                          KernelWorkspace& ws);

} // namespace pcc::detail
