#include "pcc/cli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "pcc/csv.hpp"
#include "pcc/errors.hpp"
#include "pcc/manifest.hpp"
#include "pcc/montecarlo.hpp"
#include "pcc/plot.hpp"
#include "pcc/version.hpp"

namespace pcc {

namespace {

long long parse_integer(const std::string& token, const std::string& flag) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || token.empty())
        throw std::invalid_argument(flag + ": bad token '" + token + "'");
    return value;
}

double parse_real(const std::string& token, const std::string& flag) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || token.empty())
        throw std::invalid_argument(flag + ": bad token '" + token + "'");
    return value;
}

std::vector<std::string> split(const std::string& spec, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(spec);
    while (std::getline(is, item, sep)) out.push_back(item);
    if (!spec.empty() && spec.back() == sep) out.emplace_back();
    return out;
}

std::vector<int> parse_length_list(const std::string& spec) {
    std::vector<int> lengths;
    for (const auto& token : split(spec, ','))
        lengths.push_back(static_cast<int>(parse_integer(token, "--n")));
    if (lengths.empty()) throw std::invalid_argument("--n: empty list");
    return lengths;
}

// start:step:stop (inclusive), or a comma list, or a single value — in dB.
std::vector<double> parse_snr_spec(const std::string& spec) {
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("--snr-db: bad token '" + spec +
                                        "' (expected start:step:stop)");
        const double start = parse_real(parts[0], "--snr-db");
        const double step = parse_real(parts[1], "--snr-db");
        const double stop = parse_real(parts[2], "--snr-db");
        if (!(step > 0.0))
            throw std::invalid_argument("--snr-db: step must be > 0 in '" + spec + "'");
        for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
    } else {
        for (const auto& token : split(spec, ','))
            grid.push_back(parse_real(token, "--snr-db"));
    }
    if (grid.empty()) throw std::invalid_argument("--snr-db: empty grid");
    return grid;
}

std::vector<Decoder> parse_decoder_list(const std::string& spec) {
    std::vector<Decoder> decoders;
    for (const auto& token : split(spec, ',')) {
        try {
            decoders.push_back(decoder_from_name(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("--decoders: bad token '" + token + "'");
        }
    }
    if (decoders.empty()) throw std::invalid_argument("--decoders: empty list");
    return decoders;
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct SimulateSettings {
    std::string lengths = "2,4,8";
    std::string snr = "0:2:40";
    std::string decoders = "hard,flip,soft";
    std::uint64_t seed = 1;
    long long min_errors = 200;
    long long max_blocks = 100000000;
    int workers = 0;
    std::string out;
    std::string config_file;
};

int run_simulate(const SimulateSettings& s) {
    SimulationConfig config;
    config.code_lengths = parse_length_list(s.lengths);
    config.snr_grid_db = parse_snr_spec(s.snr);
    config.decoders = parse_decoder_list(s.decoders);
    config.seed = s.seed;
    config.min_bit_errors = s.min_errors;
    config.max_blocks = s.max_blocks;
    config.workers = s.workers;
    config.validate();

    RunManifest manifest;
    manifest.tool_version = std::string(kToolName) + " " + kVersion;
    manifest.n_list = s.lengths;
    manifest.snr_db = s.snr;
    manifest.decoders = s.decoders;
    manifest.seed = s.seed;
    manifest.min_errors = s.min_errors;
    manifest.max_blocks = s.max_blocks;
    manifest.workers = s.workers;
    manifest.started = utc_now();

    const auto progress = [](const CellResult& cell, std::size_t done, std::size_t total) {
        std::fprintf(stderr, "[%zu/%zu] %s\n", done, total, cell_status_line(cell).c_str());
    };
    const SweepResult sweep = run_sweep(config, progress);
    manifest.finished = utc_now();
    for (const auto& cell : sweep.cells) manifest.cell_status.push_back(cell_status_line(cell));

    std::ofstream csv(s.out, std::ios::binary);
    if (!csv) throw IoError("cannot write CSV: " + s.out);
    write_simulation_csv(csv, sweep);
    if (!csv.good()) throw IoError("failed while writing CSV: " + s.out);
    csv.close();
    manifest.write_file(s.out + ".manifest");

    int failures = 0;
    for (const auto& cell : sweep.cells) {
        if (!cell.ok()) {
            std::fprintf(stderr, "cell failed: %s\n", cell_status_line(cell).c_str());
            ++failures;
        }
    }
    return failures ? 1 : 0;
}

struct BoundsSettings {
    std::string lengths = "2,4,8";
    std::string snr = "0:2:40";
    std::string out;
};

int run_bounds(const BoundsSettings& s) {
    const auto lengths = parse_length_list(s.lengths);
    const auto grid = parse_snr_spec(s.snr);
    std::ofstream csv(s.out, std::ios::binary);
    if (!csv) throw IoError("cannot write CSV: " + s.out);
    write_bounds_csv(csv, lengths, grid);
    if (!csv.good()) throw IoError("failed while writing CSV: " + s.out);
    return 0;
}

struct PlotSettings {
    std::string sim;
    std::string bounds;
    std::string out;
};

int run_plot(const PlotSettings& s) {
    std::string image = s.out;
    for (const char* ext : {".gp", ".plt", ".gnuplot"}) {
        const std::string suffix(ext);
        if (image.size() > suffix.size() &&
            image.compare(image.size() - suffix.size(), suffix.size(), suffix) == 0) {
            image.erase(image.size() - suffix.size());
            break;
        }
    }
    image += ".png";

    std::ostringstream script;
    write_plot_script(script, s.sim,
                      s.bounds.empty() ? std::nullopt : std::optional<std::string>(s.bounds),
                      image);
    std::ofstream out(s.out, std::ios::binary);
    if (!out) throw IoError("cannot write plot script: " + s.out);
    out << script.str();
    if (!out.good()) throw IoError("failed while writing plot script: " + s.out);
    return 0;
}

// Config-file values fill in flags the user did not pass on the command line.
void apply_config_file(const CLI::App& cmd, const std::string& path, SimulateSettings& s) {
    const auto entries = read_key_value_file(path);
    const auto apply = [&](const char* flag, const char* key, auto setter) {
        if (cmd.get_option(flag)->count() > 0) return; // explicit flag wins
        const auto it = entries.find(key);
        if (it != entries.end()) setter(it->second);
    };
    apply("--n", "n", [&](const std::string& v) { s.lengths = v; });
    apply("--snr-db", "snr-db", [&](const std::string& v) { s.snr = v; });
    apply("--decoders", "decoders", [&](const std::string& v) { s.decoders = v; });
    apply("--seed", "seed", [&](const std::string& v) {
        s.seed = static_cast<std::uint64_t>(parse_integer(v, "seed"));
    });
    apply("--min-errors", "min-errors",
          [&](const std::string& v) { s.min_errors = parse_integer(v, "min-errors"); });
    apply("--max-blocks", "max-blocks",
          [&](const std::string& v) { s.max_blocks = parse_integer(v, "max-blocks"); });
    apply("--workers", "workers", [&](const std::string& v) {
        s.workers = static_cast<int>(parse_integer(v, "workers"));
    });
}

} // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"single-parity-check code simulation and bound toolkit"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
    app.require_subcommand(1);
    int exit_code = 0;

    SimulateSettings sim;
    auto* simulate = app.add_subcommand("simulate", "run a Monte Carlo BER/BLER sweep");
    simulate->add_option("--n", sim.lengths, "comma list of code lengths (default 2,4,8)");
    simulate->add_option("--snr-db", sim.snr,
                         "SNR per bit, dB: start:step:stop or comma list (default 0:2:40)");
    simulate->add_option("--decoders", sim.decoders,
                         "comma list from {hard, flip, soft} (default all)");
    simulate->add_option("--seed", sim.seed, "master seed (default 1)");
    simulate->add_option("--min-errors", sim.min_errors,
                         "bit errors to collect per cell (default 200)");
    simulate->add_option("--max-blocks", sim.max_blocks,
                         "block cap per cell (default 1e8)");
    simulate->add_option("--workers", sim.workers, "worker threads, 0 = auto")
        ->envname("PCCSIM_WORKERS");
    simulate->add_option("--out", sim.out, "output CSV path")->required();
    simulate->add_option("--config", sim.config_file,
                         "key=value config file (a manifest replays a run)");
    simulate->callback([&] {
        if (!sim.config_file.empty()) apply_config_file(*simulate, sim.config_file, sim);
        exit_code = run_simulate(sim);
    });

    BoundsSettings bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the analytic error bounds");
    bounds_cmd->add_option("--n", bounds.lengths, "comma list of code lengths");
    bounds_cmd->add_option("--snr-db", bounds.snr, "SNR per bit grid, dB");
    bounds_cmd->add_option("--out", bounds.out, "output CSV path")->required();
    bounds_cmd->callback([&] { exit_code = run_bounds(bounds); });

    PlotSettings plot;
    auto* plot_cmd = app.add_subcommand("plot", "emit a gnuplot script for existing CSVs");
    plot_cmd->add_option("--sim", plot.sim, "simulation CSV path")->required();
    plot_cmd->add_option("--bounds", plot.bounds, "bounds CSV path (optional)");
    plot_cmd->add_option("--out", plot.out, "output script path")->required();
    plot_cmd->callback([&] { exit_code = run_plot(plot); });

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back(kToolName);
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(argv_storage.size());
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return exit_code;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_main(args);
}

} // namespace pcc
