#include "pcc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "montecarlo_kernel.hpp"
#include "pcc/bounds.hpp"
#include "pcc/errors.hpp"

namespace pcc {

namespace {

// Fixed chunk schedule: sizes ramp geometrically so cheap cells finish after
// one small chunk while expensive cells get work units large enough to keep
// every worker busy. The schedule depends only on the chunk index (never on
// worker count or timing), which is what makes the counts reproducible.
constexpr long long kChunkBase = 4096;
constexpr long long kChunkMax = 262144;
constexpr int kRampSteps = 6; // kChunkBase << kRampSteps == kChunkMax

long long chunk_nominal_size(long long index) {
    if (index >= kRampSteps) return kChunkMax;
    return kChunkBase << index;
}

long long chunk_offset(long long index) {
    if (index >= kRampSteps)
        return (kChunkMax - kChunkBase) * 2 + (index - kRampSteps) * kChunkMax;
    return (kChunkBase << index) - kChunkBase;
}

struct ChunkSpan {
    long long size = 0;
};

ChunkSpan chunk_span(long long index, long long max_blocks) {
    const long long start = chunk_offset(index);
    if (start >= max_blocks) return {0};
    return {std::min(chunk_nominal_size(index), max_blocks - start)};
}

struct CellAccumulator {
    detail::ChunkStats totals;
    bool stop = false;
    bool capped = false;

    void commit(const detail::ChunkStats& chunk, const SimulationConfig& config) {
        totals.add(chunk);
        if (totals.data_bit_errors >= config.min_bit_errors) {
            stop = true;
        } else if (totals.blocks >= config.max_blocks) {
            stop = true;
            capped = true;
        }
    }
};

BerEstimate finish_estimate(const CellAccumulator& acc, int n) {
    BerEstimate est;
    est.blocks = acc.totals.blocks;
    est.block_errors = acc.totals.block_errors;
    est.bits = acc.totals.blocks * (n - 1);
    est.bit_errors = acc.totals.data_bit_errors;
    est.all_bits = acc.totals.blocks * n;
    est.all_bit_errors = acc.totals.total_bit_errors;
    est.capped = acc.capped;
    return est;
}

int resolve_workers(int configured) {
    if (configured > 0) return configured;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

} // namespace

std::vector<double> SimulationConfig::default_snr_grid() {
    std::vector<double> grid;
    for (int db = 0; db <= 40; db += 2) grid.push_back(static_cast<double>(db));
    return grid;
}

void SimulationConfig::validate() const {
    if (code_lengths.empty()) throw std::invalid_argument("config: no code lengths");
    for (int n : code_lengths) (void)CodeParams(n); // length checks
    if (snr_grid_db.empty()) throw std::invalid_argument("config: empty SNR grid");
    for (std::size_t i = 1; i < snr_grid_db.size(); ++i)
        if (!(snr_grid_db[i] > snr_grid_db[i - 1]))
            throw std::invalid_argument("config: SNR grid must be strictly increasing");
    if (decoders.empty()) throw std::invalid_argument("config: no decoders");
    if (min_bit_errors < 1) throw std::invalid_argument("config: min_bit_errors must be >= 1");
    if (max_blocks < 1) throw std::invalid_argument("config: max_blocks must be >= 1");
    if (workers < 0) throw std::invalid_argument("config: workers must be >= 0");
    if (soft_ml_cap < 2) throw std::invalid_argument("config: soft_ml_cap must be >= 2");
    if (sigma_override && !(*sigma_override >= 0.0))
        throw std::invalid_argument("config: sigma_override must be >= 0");
}

double BerEstimate::ci95_halfwidth() const {
    if (bits <= 0) return 0.0;
    const double p = ber();
    return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(bits));
}

double BerEstimate::bler_stderr() const {
    if (blocks <= 0) return 0.0;
    const double p = bler();
    return std::sqrt(p * (1.0 - p) / static_cast<double>(blocks));
}

const CellResult* SweepResult::find(int n, Decoder d, double gamma_b_db) const {
    for (const auto& cell : cells)
        if (cell.n == n && cell.decoder == d && std::abs(cell.gamma_b_db - gamma_b_db) < 1e-9)
            return &cell;
    return nullptr;
}

std::uint64_t derive_cell_seed(std::uint64_t master, int n, Decoder decoder,
                               std::size_t snr_index) {
    return derive_seed(master, static_cast<std::uint64_t>(n),
                       static_cast<std::uint64_t>(decoder), snr_index);
}

BerEstimate run_cell(const CodeParams& params, Decoder decoder, const SnrPoint& snr,
                     const SimulationConfig& config, std::uint64_t cell_seed) {
    config.validate();
    if (decoder == Decoder::soft_ml && params.n() > config.soft_ml_cap)
        throw CapacityError("run_cell: soft ML at n = " + std::to_string(params.n()) +
                            " exceeds the brute-force cap of " +
                            std::to_string(config.soft_ml_cap));
    const double sigma = config.sigma_override ? *config.sigma_override
                                               : noise_sigma(snr.gamma_c);
    const int n = params.n();
    const int workers = resolve_workers(config.workers);

    CellAccumulator acc;
    if (workers == 1) {
        detail::KernelWorkspace ws;
        for (long long index = 0; !acc.stop; ++index) {
            const ChunkSpan span = chunk_span(index, config.max_blocks);
            acc.commit(detail::simulate_chunk(n, decoder, sigma, span.size,
                                              Rng(derive_seed(cell_seed, index)), ws),
                       config);
        }
        return finish_estimate(acc, n);
    }

    // Workers race ahead through the fixed chunk schedule; the reducer folds
    // results in strict index order so the stopping decision (and therefore
    // every count) is independent of scheduling.
    std::mutex mutex;
    std::condition_variable chunk_ready;
    std::condition_variable space_free;
    std::map<long long, detail::ChunkStats> pending;
    std::atomic<long long> next_chunk{0};
    long long committed = 0;       // guarded by mutex
    bool stop_issued = false;      // guarded by mutex
    const long long lookahead = std::max<long long>(16, 4LL * workers);

    auto worker_fn = [&] {
        detail::KernelWorkspace ws;
        while (true) {
            const long long index = next_chunk.fetch_add(1);
            {
                std::unique_lock lock(mutex);
                space_free.wait(lock, [&] { return stop_issued || index < committed + lookahead; });
                if (stop_issued) return;
            }
            const ChunkSpan span = chunk_span(index, config.max_blocks);
            detail::ChunkStats stats;
            if (span.size > 0)
                stats = detail::simulate_chunk(n, decoder, sigma, span.size,
                                               Rng(derive_seed(cell_seed, index)), ws);
            else
                stats.blocks = 0;
            {
                std::lock_guard lock(mutex);
                pending.emplace(index, stats);
            }
            chunk_ready.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn);

    {
        std::unique_lock lock(mutex);
        while (!acc.stop) {
            chunk_ready.wait(lock, [&] { return pending.contains(committed); });
            const auto it = pending.find(committed);
            const detail::ChunkStats stats = it->second;
            pending.erase(it);
            ++committed;
            lock.unlock();
            acc.commit(stats, config);
            lock.lock();
            space_free.notify_all();
        }
        stop_issued = true;
    }
    space_free.notify_all();
    for (auto& t : pool) t.join();
    return finish_estimate(acc, n);
}

SweepResult run_sweep(const SimulationConfig& config, const ProgressFn& progress) {
    config.validate();
    SweepResult result;
    result.config = config;
    const std::size_t total =
        config.code_lengths.size() * config.decoders.size() * config.snr_grid_db.size();
    result.cells.reserve(total);

    std::size_t done = 0;
    for (int n : config.code_lengths) {
        const CodeParams params(n);
        for (Decoder decoder : config.decoders) {
            for (std::size_t snr_index = 0; snr_index < config.snr_grid_db.size(); ++snr_index) {
                const SnrPoint snr = SnrPoint::from_db(config.snr_grid_db[snr_index], params);
                CellResult cell;
                cell.n = n;
                cell.decoder = decoder;
                cell.gamma_b_db = snr.gamma_b_db;
                cell.gamma_c = snr.gamma_c;
                try {
                    cell.estimate = run_cell(params, decoder, snr, config,
                                             derive_cell_seed(config.seed, n, decoder, snr_index));
                } catch (const std::exception& e) {
                    cell.error = e.what();
                }
                result.cells.push_back(cell);
                ++done;
                if (progress) progress(result.cells.back(), done, total);
            }
        }
    }
    return result;
}

double measure_diversity(const SweepResult& sweep, Decoder decoder, int n,
                         double window_decades) {
    std::vector<std::pair<double, double>> curve;
    double max_db = -1e300;
    for (const auto& cell : sweep.cells) {
        if (cell.n != n || cell.decoder != decoder || !cell.ok()) continue;
        curve.emplace_back(cell.gamma_b_db, cell.estimate.bler());
        max_db = std::max(max_db, cell.gamma_b_db);
    }
    if (curve.size() < 2)
        throw std::invalid_argument("measure_diversity: no curve for this (decoder, n)");
    const double min_db = max_db - 10.0 * window_decades;
    for (const auto& cell : sweep.cells) {
        if (cell.n != n || cell.decoder != decoder || !cell.ok()) continue;
        if (cell.gamma_b_db < min_db) continue;
        if (cell.estimate.capped && cell.estimate.bit_errors < sweep.config.min_bit_errors)
            throw UndersampledError(
                "measure_diversity: cell n=" + std::to_string(n) + " " + decoder_name(decoder) +
                " at " + std::to_string(cell.gamma_b_db) +
                " dB hit the block cap with too few errors");
    }
    return diversity_slope(curve, window_decades);
}

} // namespace pcc
