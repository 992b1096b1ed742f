#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "bitword.hpp"
#include "rational.hpp"

namespace golay {

/// Generator polynomial of the (23,12) binary Golay code,
///   g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1,
/// packed LSB-first (bit i = coefficient of x^i).
inline constexpr std::uint32_t kGeneratorPoly = 0xC75u;

inline constexpr int kInfoBits = 12;
inline constexpr std::uint32_t kInfoMask = 0xFFFu;
inline constexpr std::size_t kCodebookSize = std::size_t{1} << kInfoBits;

enum class CodeVariant { g23, g24 };

/// Remainder of m(x) * x^11 modulo g(x); the 11 parity coefficients of the
/// systematic G23 codeword for information word m.
inline std::uint32_t cyclic_parity(std::uint32_t info) {
    if (info >> kInfoBits)
        throw std::invalid_argument("cyclic_parity: information word exceeds 12 bits");
    std::uint32_t r = info << 11;
    for (int d = 22; d >= 11; --d)
        if (r & (1u << d)) r ^= kGeneratorPoly << (d - 11);
    return r;
}

/// A full systematic codebook, indexed by information word value.
/// Layout: positions 0..11 carry the information word, positions 12..22 the
/// cyclic parity (coefficient j of the remainder at position 12+j), and for
/// G24 position 23 carries an overall parity symbol.
struct Codebook {
    CodeVariant variant;
    int length;                            // 23 or 24
    Rational rate;                         // 12/23 or 12/24
    std::array<BitWord, kInfoBits> generator_rows;
    std::vector<BitWord> codewords;        // size 4096
    std::map<int, std::size_t> weight_histogram;
};

namespace detail {

inline void check_histogram(const Codebook& cb, const std::map<int, std::size_t>& expected) {
    if (cb.weight_histogram != expected)
        throw std::logic_error("Codebook: weight histogram mismatch during construction");
}

inline Codebook build(CodeVariant variant) {
    Codebook cb;
    cb.variant = variant;
    cb.length = variant == CodeVariant::g23 ? 23 : 24;
    cb.rate = Rational(kInfoBits, cb.length);
    cb.codewords.reserve(kCodebookSize);
    for (std::uint32_t m = 0; m < kCodebookSize; ++m) {
        BitWord w(m | (cyclic_parity(m) << kInfoBits), 23);
        if (variant == CodeVariant::g24) w = extend_parity(w);
        if ((w.bits() & kInfoMask) != m)
            throw std::logic_error("Codebook: construction lost the systematic property");
        cb.codewords.push_back(w);
        ++cb.weight_histogram[weight(w)];
    }
    for (int i = 0; i < kInfoBits; ++i) cb.generator_rows[i] = cb.codewords[1u << i];
    return cb;
}

}  // namespace detail

/// The (23,12,7) Golay code. The weight histogram doubles as a minimum
/// distance check: the code is linear, so min distance = min nonzero weight.
inline Codebook build_g23() {
    Codebook cb = detail::build(CodeVariant::g23);
    detail::check_histogram(cb, {{0, 1},
                                 {7, 253},
                                 {8, 506},
                                 {11, 1288},
                                 {12, 1288},
                                 {15, 506},
                                 {16, 253},
                                 {23, 1}});
    return cb;
}

/// The (24,12,8) extended Golay code: G23 plus an overall parity symbol.
inline Codebook build_g24() {
    Codebook cb = detail::build(CodeVariant::g24);
    detail::check_histogram(cb, {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
    return cb;
}

inline BitWord encode(const Codebook& cb, BitWord info) {
    if (info.length() != kInfoBits)
        throw std::invalid_argument("encode: information word must have length 12");
    return cb.codewords[info.bits()];
}

}  // namespace golay
