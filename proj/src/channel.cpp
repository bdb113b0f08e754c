#include "pcc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace pcc {

SnrPoint SnrPoint::from_db(double gamma_b_db, double rate) {
    if (!(rate > 0.0) || !(rate <= 1.0))
        throw std::invalid_argument("SnrPoint: rate must be in (0, 1]");
    SnrPoint p;
    p.gamma_b_db = gamma_b_db;
    p.gamma_b = std::pow(10.0, gamma_b_db / 10.0);
    p.gamma_c = rate * p.gamma_b;
    return p;
}

std::vector<double> bpsk_map(const BitBlock& word) {
    std::vector<double> x(static_cast<std::size_t>(word.size()));
    for (int i = 0; i < word.size(); ++i)
        x[static_cast<std::size_t>(i)] = word[i] ? -1.0 : 1.0;
    return x;
}

double rayleigh_sample(Rng& rng) {
    double u = rng.uniform_unit();
    while (u == 1.0) u = rng.uniform_unit(); // h = 0 would carry no CSI
    return std::sqrt(-std::log(u));
}

double noise_sigma(double gamma_c) {
    if (!(gamma_c > 0.0)) throw std::invalid_argument("noise_sigma: gamma_c must be > 0");
    return std::sqrt(1.0 / (2.0 * gamma_c));
}

ChannelObservation transmit(const BitBlock& codeword, const SnrPoint& snr, Rng& rng) {
    const int n = codeword.size();
    const double sigma = noise_sigma(snr.gamma_c);
    ChannelObservation obs;
    obs.gamma_c = snr.gamma_c;
    obs.r.resize(static_cast<std::size_t>(n));
    obs.h.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = codeword[i] ? -1.0 : 1.0;
        const double h = rayleigh_sample(rng);
        const double w = sigma * rng.normal();
        obs.h[static_cast<std::size_t>(i)] = h;
        obs.r[static_cast<std::size_t>(i)] = h * x + w;
    }
    return obs;
}

} // namespace pcc
