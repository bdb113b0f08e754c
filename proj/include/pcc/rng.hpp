#pragma once

#include <cmath>
#include <cstdint>

namespace pcc {

/// SplitMix64 step; used for seeding and for deriving stream keys.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent substream seed from a master seed and a list of
/// integer key components. Used as a counter-based split: the same
/// (master, components...) always yields the same substream, regardless of
/// evaluation order or thread count.
template <typename... Key>
std::uint64_t derive_seed(std::uint64_t master, Key... components) {
    std::uint64_t state = master;
    std::uint64_t out = splitmix64(state);
    auto fold = [&](std::uint64_t c) {
        state ^= c + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2);
        out = splitmix64(state);
    };
    (fold(static_cast<std::uint64_t>(components)), ...);
    return out;
}

/// xoshiro256++ with Marsaglia-polar Gaussian sampling.
/// One instance per worker/stream; instances never share state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on (0, 1]: 53-bit resolution, never returns 0.
    double uniform_unit() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform on [0, 1).
    double uniform_half_open() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal draw (Marsaglia polar; second value of each pair is cached).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform_half_open() - 1.0;
            v = 2.0 * uniform_half_open() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double scale = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * scale;
        has_spare_ = true;
        return u * scale;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace pcc
