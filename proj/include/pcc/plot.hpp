#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace pcc {

/// Emits a self-contained gnuplot script: log-y BER versus SNR per bit, one
/// line per (n, decoder) found in the simulation CSV, analytic bound curves
/// dashed when a bounds CSV is given. The script references the CSV paths as
/// passed; no plotting library is linked. Throws IoError (naming the path)
/// if an input CSV is missing.
void write_plot_script(std::ostream& os, const std::string& sim_csv_path,
                       const std::optional<std::string>& bounds_csv_path,
                       const std::string& image_path);

} // namespace pcc
