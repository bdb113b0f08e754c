#pragma once

#include <vector>

#include "pcc/bitblock.hpp"

namespace pcc {

/// Parameters of an (n, n-1) single-parity-check code with even parity.
/// The code detects one error and corrects none: d_min = 2, t = 0.
struct CodeParams {
    explicit CodeParams(int block_length);

    int n() const { return n_; }
    int k() const { return n_ - 1; }
    double rate() const { return static_cast<double>(k()) / n_; }
    int d_min() const { return 2; }
    int t() const { return 0; }

private:
    int n_;
};

/// Appends one even-parity bit: the output is `data` followed by a bit that
/// makes the total number of 1s even. Equivalent to data * G over GF(2) with
/// G = (I_k | 1_k). Throws std::invalid_argument on an empty data word.
BitBlock encode(const BitBlock& data);

/// True iff the word has an even number of 1s (syndrome w * H^T = 0).
/// Throws std::invalid_argument for words shorter than 2 bits.
bool parity_ok(const BitBlock& word);

/// G = (I_k | 1_k), returned as k rows of length n.
std::vector<BitBlock> generator_matrix(const CodeParams& params);

/// H = all-ones row of length n.
BitBlock parity_check_matrix(const CodeParams& params);

} // namespace pcc
