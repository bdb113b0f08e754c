#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcc/channel.hpp"
#include "pcc/code.hpp"
#include "pcc/decoders.hpp"

namespace pcc {

/// Full description of one BER-vs-SNR experiment.
struct SimulationConfig {
    std::vector<int> code_lengths{2, 4, 8};
    std::vector<double> snr_grid_db = default_snr_grid();
    std::vector<Decoder> decoders{Decoder::hard, Decoder::flip, Decoder::soft_ml};
    long long min_bit_errors = 200;    ///< adaptive stopping target per cell
    long long max_blocks = 100000000;  ///< hard cap per cell; hitting it flags the cell
    std::uint64_t seed = 1;
    int workers = 0;                   ///< 0 = one per hardware thread
    int soft_ml_cap = kSoftMlDefaultCap;
    /// Test hook: fixes the noise deviation (0 = noiseless) instead of
    /// deriving it from the SNR point.
    std::optional<double> sigma_override;

    static std::vector<double> default_snr_grid(); // 0..40 dB step 2

    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

/// Error counts and rates for one (n, decoder, SNR) cell.
/// `bits`/`bit_errors` count information bits only; `all_bits`/`all_bit_errors`
/// include the parity position.
struct BerEstimate {
    long long blocks = 0;
    long long block_errors = 0;
    long long bits = 0;
    long long bit_errors = 0;
    long long all_bits = 0;
    long long all_bit_errors = 0;
    bool capped = false; ///< stopped on max_blocks before reaching min_bit_errors

    double ber() const { return bits ? static_cast<double>(bit_errors) / bits : 0.0; }
    double ber_all() const { return all_bits ? static_cast<double>(all_bit_errors) / all_bits : 0.0; }
    double bler() const { return blocks ? static_cast<double>(block_errors) / blocks : 0.0; }
    /// Normal-approximation 95% half-width on ber().
    double ci95_halfwidth() const;
    /// One Monte Carlo standard error of bler().
    double bler_stderr() const;
};

struct CellResult {
    int n = 0;
    Decoder decoder = Decoder::hard;
    double gamma_b_db = 0.0;
    double gamma_c = 0.0;
    BerEstimate estimate;
    std::string error; ///< empty = completed; otherwise the cell failed

    bool ok() const { return error.empty(); }
};

struct SweepResult {
    SimulationConfig config;
    std::vector<CellResult> cells;

    const CellResult* find(int n, Decoder d, double gamma_b_db) const;
};

/// Substream seed for one cell, split from the master seed by a counter-based
/// key on (n, decoder, SNR index). Independent of execution order and worker
/// count.
std::uint64_t derive_cell_seed(std::uint64_t master, int n, Decoder decoder,
                               std::size_t snr_index);

/// Simulates one cell: draw data, encode, transmit, decode, compare. Stops at
/// the first chunk boundary where min_bit_errors information-bit errors have
/// accumulated, or at max_blocks. The chunk schedule is fixed, so the counts
/// are bit-identical for any worker count. Throws CapacityError if the
/// decoder cannot run at this n.
BerEstimate run_cell(const CodeParams& params, Decoder decoder, const SnrPoint& snr,
                     const SimulationConfig& config, std::uint64_t cell_seed);

using ProgressFn = std::function<void(const CellResult&, std::size_t done, std::size_t total)>;

/// Evaluates every (n, decoder, SNR) cell of the config. Cell failures (e.g.
/// soft ML above its cap) are recorded as error markers, not thrown.
SweepResult run_sweep(const SimulationConfig& config, const ProgressFn& progress = {});

/// Diversity estimate: slope of the simulated block-error-rate curve for one
/// (decoder, n) over the top `window_decades` decades of the SNR grid.
/// Throws UndersampledError if a windowed cell stopped on the block cap short
/// of min_bit_errors.
double measure_diversity(const SweepResult& sweep, Decoder decoder, int n,
                         double window_decades = 2.0);

} // namespace pcc
