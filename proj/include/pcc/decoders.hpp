#pragma once

#include <optional>
#include <span>
#include <string>

#include "pcc/bitblock.hpp"
#include "pcc/channel.hpp"
#include "pcc/code.hpp"

namespace pcc {

enum class Decoder { hard, flip, soft_ml };

std::string decoder_name(Decoder d);
Decoder decoder_from_name(const std::string& name);

/// Default cap on the brute-force ML search (2^(n-1) metric evaluations).
inline constexpr int kSoftMlDefaultCap = 24;

struct DecodeResult {
    BitBlock codeword_estimate;
    /// Set only by flip decoding, and only when the input word failed parity.
    /// 0-based symbol position.
    std::optional<int> flipped_index;

    /// First k = n-1 positions of the codeword estimate.
    BitBlock data_estimate() const {
        return codeword_estimate.prefix(codeword_estimate.size() - 1);
    }
};

/// Per-symbol threshold detector: bit i = 0 iff r_i >= 0 (ties resolve to 0).
/// With h_i > 0, CSI weighting cannot change the sign, so none is applied.
BitBlock hard_decide(std::span<const double> r);
BitBlock hard_decide(const ChannelObservation& obs);

/// Hard-decide, then if the parity check fails flip the bit with the smallest
/// CSI magnitude (smallest index wins exact ties). The output always passes
/// the parity check. O(n).
DecodeResult flip_decode(std::span<const double> r, std::span<const double> h);
DecodeResult flip_decode(const ChannelObservation& obs);

/// Brute-force ML: maximizes sum_i h_i r_i x_i(c) over all 2^(n-1) codewords,
/// which is equivalent to minimizing sum_i (r_i - h_i x_i(c))^2. Codewords are
/// enumerated via a Gray walk so each step updates the metric in O(1); ties
/// break toward the smallest codeword index in lexicographic order. Throws
/// CapacityError when n exceeds `max_block_length`.
DecodeResult soft_ml_decode(std::span<const double> r, std::span<const double> h,
                            int max_block_length = kSoftMlDefaultCap);
DecodeResult soft_ml_decode(const ChannelObservation& obs, const CodeParams& params,
                            int max_block_length = kSoftMlDefaultCap);

/// Wagner's rule: hard-decide, and on parity failure flip the bit with the
/// least reliability |h_i r_i|. For a single-parity-check code this returns
/// the same codeword as soft_ml_decode (up to exact metric ties) at O(n)
/// cost; the Monte Carlo engine uses it as the soft-decision fast path.
DecodeResult wagner_decode(std::span<const double> r, std::span<const double> h);

/// Median decode time per block in nanoseconds, measured over `trials`
/// synthetic observations at a fixed operating point. Requires
/// trials >= 10000 so the medians are stable enough to compare growth rates.
double decode_throughput_probe(Decoder decoder, int n, long long trials);

} // namespace pcc
