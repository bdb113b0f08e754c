#include "pcc/csv.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "pcc/bounds.hpp"

namespace pcc {

const char* const kSimulationCsvHeader =
    "n,decoder,gamma_b_db,gamma_c_linear,blocks,bits,bit_errors,block_errors,"
    "ber_data,ber_all,bler,ci95";

const char* const kBoundsCsvHeader =
    "n,gamma_b_db,hard_bound,soft_bound,fd_bound_eq12,fd_bound_components,"
    "p2_bar,pn_bar,hard_bound_clamped,soft_bound_clamped,fd_bound_eq12_clamped,"
    "fd_bound_components_clamped";

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

namespace {

const double kNan = std::numeric_limits<double>::quiet_NaN();

void put(std::ostream& os, double v, char sep = ',') { os << format_double(v) << sep; }

} // namespace

void write_simulation_csv(std::ostream& os, const SweepResult& sweep) {
    os << kSimulationCsvHeader << '\n';
    for (const auto& cell : sweep.cells) {
        const BerEstimate& e = cell.estimate;
        const bool ok = cell.ok();
        os << cell.n << ',' << decoder_name(cell.decoder) << ',';
        put(os, cell.gamma_b_db);
        put(os, cell.gamma_c);
        os << e.blocks << ',' << e.bits << ',' << e.bit_errors << ',' << e.block_errors << ',';
        put(os, ok ? e.ber() : kNan);
        put(os, ok ? e.ber_all() : kNan);
        put(os, ok ? e.bler() : kNan);
        os << format_double(ok ? e.ci95_halfwidth() : kNan) << '\n';
    }
}

void write_bounds_csv(std::ostream& os, const std::vector<int>& code_lengths,
                      const std::vector<double>& snr_grid_db) {
    os << kBoundsCsvHeader << '\n';
    for (int n : code_lengths) {
        const CodeParams params(n);
        for (double db : snr_grid_db) {
            const double gamma_c = SnrPoint::from_db(db, params).gamma_c;
            const double hard = hard_bound(params, gamma_c);
            const double soft = soft_bound(params, gamma_c);
            const double fd = fd_bound(params, gamma_c);
            const double fd_parts = fd_bound_components(params, gamma_c);
            os << n << ',';
            put(os, db);
            put(os, hard);
            put(os, soft);
            put(os, fd);
            put(os, fd_parts);
            put(os, p2_bar(params, gamma_c));
            put(os, pn_bar(params, gamma_c));
            put(os, std::min(hard, 1.0));
            put(os, std::min(soft, 1.0));
            put(os, std::min(fd, 1.0));
            os << format_double(std::min(fd_parts, 1.0)) << '\n';
        }
    }
}

} // namespace pcc
