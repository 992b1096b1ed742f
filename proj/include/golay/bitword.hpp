#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace golay {

/// Fixed-length binary word packed LSB-first: bit i of bits() is symbol i.
/// Lengths in use: 12 (information words), 23 (G23 words), 24 (G24 words).
class BitWord {
public:
    BitWord() = default;

    BitWord(std::uint32_t bits, int length) : bits_(bits), length_(length) {
        if (length < 1 || length > 24)
            throw std::invalid_argument("BitWord: length " + std::to_string(length) +
                                        " outside [1, 24]");
        if ((bits >> length) != 0)
            throw std::invalid_argument("BitWord: value " + std::to_string(bits) +
                                        " does not fit in " + std::to_string(length) + " bits");
    }

    std::uint32_t bits() const { return bits_; }
    int length() const { return length_; }

    bool bit(int i) const {
        if (i < 0 || i >= length_)
            throw std::invalid_argument("BitWord::bit: index " + std::to_string(i) +
                                        " outside [0, " + std::to_string(length_) + ")");
        return (bits_ >> i) & 1u;
    }

    /// Symbol-wise XOR; both operands must have the same length.
    BitWord operator^(BitWord other) const {
        if (length_ != other.length_)
            throw std::invalid_argument("BitWord: XOR of lengths " + std::to_string(length_) +
                                        " and " + std::to_string(other.length_));
        return BitWord(bits_ ^ other.bits_, length_);
    }

    friend bool operator==(BitWord, BitWord) = default;

private:
    std::uint32_t bits_ = 0;
    int length_ = 1;
};

/// Hamming weight.
inline int weight(BitWord w) { return std::popcount(w.bits()); }

/// Hamming distance; lengths must match.
inline int distance(BitWord a, BitWord b) { return weight(a ^ b); }

/// Append an overall parity symbol at position 23, making total weight even.
inline BitWord extend_parity(BitWord w23) {
    if (w23.length() != 23)
        throw std::invalid_argument("extend_parity: expected length 23");
    const std::uint32_t parity = static_cast<std::uint32_t>(weight(w23)) & 1u;
    return BitWord(w23.bits() | (parity << 23), 24);
}

/// First 23 symbols of a length-24 word.
inline BitWord prefix23(BitWord w24) {
    if (w24.length() != 24)
        throw std::invalid_argument("prefix23: expected length 24");
    return BitWord(w24.bits() & 0x7FFFFFu, 23);
}

/// Information part (positions 0..11) of a systematic codeword.
inline BitWord info_word(BitWord w) {
    if (w.length() < 12)
        throw std::invalid_argument("info_word: word shorter than 12 symbols");
    return BitWord(w.bits() & 0xFFFu, 12);
}

}  // namespace golay
