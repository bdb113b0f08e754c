#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcc {

/// Largest supported block length. Blocks are stored in a single 64-bit word.
inline constexpr int kMaxBlockLength = 64;

/// Fixed-length vector of bits (data word, codeword, or hard-decision word).
/// Bit i of the word is symbol position i; position 0 is transmitted first.
class BitBlock {
public:
    BitBlock() = default;

    /// All-zero block of the given length.
    explicit BitBlock(int length) : len_(check_length(length)) {}

    static BitBlock from_word(std::uint64_t word, int length) {
        BitBlock b(length);
        b.bits_ = length == kMaxBlockLength ? word : (word & ((std::uint64_t{1} << length) - 1));
        return b;
    }

    static BitBlock from_bits(std::span<const int> bits) {
        BitBlock b(static_cast<int>(bits.size()));
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != 0 && bits[i] != 1)
                throw std::invalid_argument("BitBlock: elements must be 0 or 1");
            b.bits_ |= std::uint64_t{bits[i] != 0} << i;
        }
        return b;
    }

    static BitBlock from_bits(std::initializer_list<int> bits) {
        return from_bits(std::span<const int>(bits.begin(), bits.size()));
    }

    int size() const { return len_; }
    bool empty() const { return len_ == 0; }
    std::uint64_t word() const { return bits_; }

    int bit(int i) const {
        check_index(i);
        return static_cast<int>((bits_ >> i) & 1);
    }
    int operator[](int i) const { return bit(i); }

    void set_bit(int i, int value) {
        check_index(i);
        if (value != 0 && value != 1) throw std::invalid_argument("BitBlock: bit must be 0 or 1");
        bits_ = (bits_ & ~(std::uint64_t{1} << i)) | (std::uint64_t{value} << i);
    }

    void flip_bit(int i) {
        check_index(i);
        bits_ ^= std::uint64_t{1} << i;
    }

    /// Number of 1 bits.
    int weight() const { return std::popcount(bits_); }

    /// First `count` positions as a new block.
    BitBlock prefix(int count) const {
        if (count < 0 || count > len_) throw std::invalid_argument("BitBlock: prefix out of range");
        return from_word(bits_, count);
    }

    std::vector<int> to_vector() const {
        std::vector<int> v(static_cast<std::size_t>(len_));
        for (int i = 0; i < len_; ++i) v[static_cast<std::size_t>(i)] = bit(i);
        return v;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(static_cast<std::size_t>(len_));
        for (int i = 0; i < len_; ++i) s.push_back(bit(i) ? '1' : '0');
        return s;
    }

    friend bool operator==(const BitBlock&, const BitBlock&) = default;

    friend std::ostream& operator<<(std::ostream& os, const BitBlock& b) {
        return os << b.to_string();
    }

private:
    static int check_length(int length) {
        if (length < 0 || length > kMaxBlockLength)
            throw std::invalid_argument("BitBlock: length must be in [0, " +
                                        std::to_string(kMaxBlockLength) + "]");
        return length;
    }
    void check_index(int i) const {
        if (i < 0 || i >= len_) throw std::out_of_range("BitBlock: index out of range");
    }

    std::uint64_t bits_ = 0;
    int len_ = 0;
};

} // namespace pcc
