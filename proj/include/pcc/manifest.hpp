#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "pcc/montecarlo.hpp"

namespace pcc {

/// Flat key=value record of one simulation run. The configuration keys use
/// the same names and value syntax as the CLI flags, so a manifest doubles as
/// a config file: re-running `simulate --config <manifest>` reproduces the
/// CSV byte for byte.
struct RunManifest {
    std::string tool_version;
    std::string n_list;        ///< e.g. "2,4,8"
    std::string snr_db;        ///< e.g. "0:2:40"
    std::string decoders;      ///< e.g. "hard,flip,soft"
    std::uint64_t seed = 1;
    long long min_errors = 200;
    long long max_blocks = 0;
    int workers = 0;
    std::string started;       ///< UTC timestamps, informational only
    std::string finished;
    std::vector<std::string> cell_status; ///< one line per cell

    void write(std::ostream& os) const;
    void write_file(const std::string& path) const;
};

/// Parses a key=value file (manifest or hand-written config). Unknown keys
/// are kept so callers can ignore e.g. cell.* entries. Throws IoError if the
/// file cannot be read.
std::map<std::string, std::string> read_key_value_file(const std::string& path);

std::string cell_status_line(const CellResult& cell);

} // namespace pcc
