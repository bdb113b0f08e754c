#include "pcc/code.hpp"

#include <stdexcept>
#include <string>

#include "pcc/errors.hpp"

namespace pcc {

CodeParams::CodeParams(int block_length) : n_(block_length) {
    if (block_length < 2)
        throw std::invalid_argument("CodeParams: block length must be at least 2, got " +
                                    std::to_string(block_length));
    if (block_length > kMaxBlockLength)
        throw CapacityError("CodeParams: block length " + std::to_string(block_length) +
                            " exceeds the supported cap of " + std::to_string(kMaxBlockLength));
}

BitBlock encode(const BitBlock& data) {
    if (data.empty()) throw std::invalid_argument("encode: empty data word");
    const int k = data.size();
    BitBlock codeword = BitBlock::from_word(data.word(), k + 1);
    codeword.set_bit(k, data.weight() & 1);
    return codeword;
}

bool parity_ok(const BitBlock& word) {
    if (word.size() < 2)
        throw std::invalid_argument("parity_ok: word must have at least 2 bits");
    return (word.weight() & 1) == 0;
}

std::vector<BitBlock> generator_matrix(const CodeParams& params) {
    const int n = params.n();
    std::vector<BitBlock> rows;
    rows.reserve(static_cast<std::size_t>(params.k()));
    for (int i = 0; i < params.k(); ++i) {
        const std::uint64_t row = (std::uint64_t{1} << i) | (std::uint64_t{1} << (n - 1));
        rows.push_back(BitBlock::from_word(row, n));
    }
    return rows;
}

BitBlock parity_check_matrix(const CodeParams& params) {
    const int n = params.n();
    return BitBlock::from_word(n == kMaxBlockLength ? ~std::uint64_t{0}
                                                    : (std::uint64_t{1} << n) - 1,
                               n);
}

} // namespace pcc
