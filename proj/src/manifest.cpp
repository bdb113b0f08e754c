#include "pcc/manifest.hpp"

#include <fstream>

#include "pcc/csv.hpp"
#include "pcc/errors.hpp"

namespace pcc {

void RunManifest::write(std::ostream& os) const {
    os << "tool_version=" << tool_version << '\n';
    os << "n=" << n_list << '\n';
    os << "snr-db=" << snr_db << '\n';
    os << "decoders=" << decoders << '\n';
    os << "seed=" << seed << '\n';
    os << "min-errors=" << min_errors << '\n';
    os << "max-blocks=" << max_blocks << '\n';
    os << "workers=" << workers << '\n';
    os << "started=" << started << '\n';
    os << "finished=" << finished << '\n';
    for (std::size_t i = 0; i < cell_status.size(); ++i)
        os << "cell_" << i << '=' << cell_status[i] << '\n';
}

void RunManifest::write_file(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot write manifest: " + path);
    write(os);
    if (!os.good()) throw IoError("failed while writing manifest: " + path);
}

std::map<std::string, std::string> read_key_value_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot read file: " + path);
    std::map<std::string, std::string> entries;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        entries[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return entries;
}

std::string cell_status_line(const CellResult& cell) {
    std::string status;
    if (!cell.ok())
        status = "error: " + cell.error;
    else if (cell.estimate.capped)
        status = "capped";
    else
        status = "ok";
    return "n=" + std::to_string(cell.n) + " decoder=" + decoder_name(cell.decoder) +
           " gamma_b_db=" + format_double(cell.gamma_b_db) +
           " blocks=" + std::to_string(cell.estimate.blocks) +
           " bit_errors=" + std::to_string(cell.estimate.bit_errors) + " status=" + status;
}

} // namespace pcc
