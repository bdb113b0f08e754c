#pragma once

#include <span>
#include <vector>

#include "pcc/bitblock.hpp"
#include "pcc/code.hpp"
#include "pcc/rng.hpp"

namespace pcc {

/// One point of the SNR axis. gamma_b is the average SNR per information bit
/// (linear), gamma_c = rate * gamma_b the average SNR per code bit.
struct SnrPoint {
    double gamma_b_db = 0.0;
    double gamma_b = 1.0;
    double gamma_c = 1.0;

    static SnrPoint from_db(double gamma_b_db, double rate);
    static SnrPoint from_db(double gamma_b_db, const CodeParams& params) {
        return from_db(gamma_b_db, params.rate());
    }
};

/// Received block: per-symbol sample r_i = h_i x_i + w_i plus the fading
/// magnitude h_i (CSI, known at the receiver). The instantaneous per-symbol
/// SNR is h_i^2 * gamma_c.
struct ChannelObservation {
    std::vector<double> r;
    std::vector<double> h;
    double gamma_c = 0.0;

    int size() const { return static_cast<int>(r.size()); }
};

/// BPSK: bit 0 -> +1, bit 1 -> -1.
std::vector<double> bpsk_map(const BitBlock& word);

/// Rayleigh magnitude with E[h^2] = 1, via h = sqrt(-ln u), u uniform on
/// (0, 1]. A u == 1 draw (h = 0) is resampled so h > 0 always holds.
double rayleigh_sample(Rng& rng);

/// Real-equivalent noise deviation for BPSK: sigma^2 = 1 / (2 gamma_c).
double noise_sigma(double gamma_c);

/// Sends a codeword over the ideally interleaved Rayleigh channel: fresh
/// i.i.d. h_i per symbol, additive Gaussian noise. Fully deterministic given
/// the rng state. Draw order per symbol: h_i first, then the noise sample.
ChannelObservation transmit(const BitBlock& codeword, const SnrPoint& snr, Rng& rng);

} // namespace pcc
