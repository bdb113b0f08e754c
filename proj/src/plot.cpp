#include "pcc/plot.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcc/errors.hpp"

namespace pcc {

namespace {

// (n, decoder) pairs in first-seen order.
std::vector<std::pair<int, std::string>> scan_simulation_pairs(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot read simulation CSV: " + path);
    std::vector<std::pair<int, std::string>> pairs;
    std::set<std::pair<int, std::string>> seen;
    std::string line;
    std::getline(is, line); // header
    while (std::getline(is, line)) {
        std::istringstream row(line);
        std::string n_field, decoder;
        if (!std::getline(row, n_field, ',') || !std::getline(row, decoder, ',')) continue;
        try {
            auto key = std::make_pair(std::stoi(n_field), decoder);
            if (seen.insert(key).second) pairs.push_back(key);
        } catch (const std::exception&) {
            continue;
        }
    }
    return pairs;
}

std::vector<int> scan_bounds_lengths(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot read bounds CSV: " + path);
    std::vector<int> lengths;
    std::set<int> seen;
    std::string line;
    std::getline(is, line); // header
    while (std::getline(is, line)) {
        const auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        try {
            const int n = std::stoi(line.substr(0, comma));
            if (seen.insert(n).second) lengths.push_back(n);
        } catch (const std::exception&) {
            continue;
        }
    }
    return lengths;
}

// "clamped" bound column indices in the bounds CSV (1-based for gnuplot).
int bound_column(const std::string& decoder) {
    if (decoder == "hard") return 9;
    if (decoder == "soft") return 10;
    return 11; // flip -> flip-decoder bound
}

} // namespace

void write_plot_script(std::ostream& os, const std::string& sim_csv_path,
                       const std::optional<std::string>& bounds_csv_path,
                       const std::string& image_path) {
    const auto pairs = scan_simulation_pairs(sim_csv_path);
    std::vector<int> bound_lengths;
    if (bounds_csv_path) bound_lengths = scan_bounds_lengths(*bounds_csv_path);

    os << "# generated by pccsim; plots information-bit BER vs average SNR per bit\n";
    os << "set datafile separator \",\"\n";
    os << "set terminal pngcairo size 960,720\n";
    os << "set output \"" << image_path << "\"\n";
    os << "set logscale y\n";
    os << "set yrange [1e-6:1]\n";
    os << "set xlabel \"average SNR per bit (dB)\"\n";
    os << "set ylabel \"BER\"\n";
    os << "set key outside right\n";
    os << "set grid\n";
    os << "plot \\\n";

    bool first = true;
    for (const auto& [n, decoder] : pairs) {
        if (!first) os << ", \\\n";
        first = false;
        os << "  \"" << sim_csv_path << "\" using 3:($1==" << n << " && strcol(2) eq \""
           << decoder << "\" ? $9 : 1/0) with linespoints title \"n=" << n << " " << decoder
           << "\"";
    }
    if (bounds_csv_path) {
        for (int n : bound_lengths) {
            for (const char* decoder : {"hard", "soft", "flip"}) {
                if (!first) os << ", \\\n";
                first = false;
                os << "  \"" << *bounds_csv_path << "\" using 2:($1==" << n << " ? $"
                   << bound_column(decoder) << " : 1/0) with lines dashtype 2 title \"n=" << n
                   << " " << decoder << " bound\"";
            }
        }
    }
    os << '\n';
}

} // namespace pcc
