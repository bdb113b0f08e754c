#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pcc/montecarlo.hpp"

namespace pcc {

/// Locale-independent shortest round-trip decimal rendering ('.' separator).
std::string format_double(double value);

/// Simulation table, one row per cell, fixed column order:
/// n,decoder,gamma_b_db,gamma_c_linear,blocks,bits,bit_errors,block_errors,
/// ber_data,ber_all,bler,ci95
/// Failed cells keep their identity columns; counts are 0 and rates are nan.
void write_simulation_csv(std::ostream& os, const SweepResult& sweep);

extern const char* const kSimulationCsvHeader;

/// Bound table, one row per (n, SNR), fixed column order:
/// n,gamma_b_db,hard_bound,soft_bound,fd_bound_eq12,fd_bound_components,
/// p2_bar,pn_bar,hard_bound_clamped,soft_bound_clamped,
/// fd_bound_eq12_clamped,fd_bound_components_clamped
void write_bounds_csv(std::ostream& os, const std::vector<int>& code_lengths,
                      const std::vector<double>& snr_grid_db);

extern const char* const kBoundsCsvHeader;

} // namespace pcc
