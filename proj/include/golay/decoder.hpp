#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bitword.hpp"
#include "codebook.hpp"
#include "rng.hpp"

namespace golay {

/// Tie-breaking policy for G24 received words at distance 4 from the code
/// (exactly six codewords tie at distance 4 there; everywhere else the
/// nearest codeword is unique).
enum class TieBreak { random_uniform, systematic_agreement };

struct DecodeOutcome {
    BitWord codeword;
    int distance = 0;      // Hamming distance from the received word
    int tie_set_size = 1;  // 1, or 6 on a distance-4 tie
};

/// Table-driven maximum-likelihood decoder for G23 and G24.
///
/// Construction enumerates every correctable error pattern once and indexes
/// it by syndrome; both tables are fully self-checked against the known
/// coset structure (counts below) and construction throws on any mismatch.
class GolayDecoder {
public:
    GolayDecoder(const Codebook& g23, const Codebook& g24) {
        if (g23.variant != CodeVariant::g23 || g24.variant != CodeVariant::g24)
            throw std::invalid_argument("GolayDecoder: codebooks passed in the wrong order");
        for (std::uint32_t m = 0; m < kCodebookSize; ++m)
            parity_of_info_[m] = static_cast<std::uint16_t>(g23.codewords[m].bits() >> kInfoBits);
        build_leaders23();
        build_cosets24();
    }

    /// Syndrome of a 23-symbol word; zero iff the word is a G23 codeword.
    std::uint32_t syndrome23(BitWord received) const {
        if (received.length() != 23)
            throw std::invalid_argument("syndrome23: expected length 23");
        return syndrome23_bits(received.bits());
    }

    /// Syndrome of a 24-symbol word: G23 syndrome of the prefix plus the
    /// overall parity in bit 11. Zero iff the word is a G24 codeword.
    std::uint32_t syndrome24(BitWord received) const {
        if (received.length() != 24)
            throw std::invalid_argument("syndrome24: expected length 24");
        return syndrome24_bits(received.bits());
    }

    /// Unique nearest-codeword decoding; always corrects up to 3 errors.
    DecodeOutcome decode23(BitWord received) const {
        if (received.length() != 23)
            throw std::invalid_argument("decode23: expected length 23");
        const std::uint32_t leader = leader23_[syndrome23_bits(received.bits())];
        return {BitWord(received.bits() ^ leader, 23), std::popcount(leader), 1};
    }

    /// Maximum-likelihood decoding of G24. Received words at distance <= 3
    /// from the code decode uniquely; at distance 4 the six tied candidates
    /// are resolved by `policy`:
    ///   random_uniform       pick uniformly among the six;
    ///   systematic_agreement pick the candidate agreeing with the received
    ///                        word on the most information positions,
    ///                        remaining ties uniform at random.
    /// Both policies are translation covariant: decode(y ^ c) and
    /// decode(y) ^ c are identically distributed for every codeword c.
    template <typename Urbg>
    DecodeOutcome decode24(BitWord received, TieBreak policy, Urbg& rng) const {
        if (received.length() != 24)
            throw std::invalid_argument("decode24: expected length 24");
        const Coset& coset = coset24_[syndrome24_bits(received.bits())];
        if (coset.count == 1)
            return {BitWord(received.bits() ^ coset.leaders[0], 24), coset.weight, 1};
        std::uint32_t pick;
        if (policy == TieBreak::random_uniform) {
            pick = uniform_index(rng, 6);
        } else {
            std::array<std::uint32_t, 6> best{};
            std::uint32_t nbest = 0;
            int best_score = kInfoBits + 1;
            for (std::uint32_t j = 0; j < 6; ++j) {
                const int score = std::popcount(coset.leaders[j] & kInfoMask);
                if (score < best_score) {
                    best_score = score;
                    nbest = 0;
                }
                if (score == best_score) best[nbest++] = j;
            }
            pick = nbest == 1 ? best[0] : best[uniform_index(rng, nbest)];
        }
        return {BitWord(received.bits() ^ coset.leaders[pick], 24), 4, 6};
    }

    /// Number of nearest codewords (1 or 6) without materializing them.
    int tie_set_size(BitWord received) const {
        if (received.length() != 24)
            throw std::invalid_argument("tie_set_size: expected length 24");
        return coset24_[syndrome24_bits(received.bits())].count;
    }

    /// The full set of nearest codewords (size 1 or 6), sorted by value.
    std::vector<BitWord> tie_set(BitWord received) const {
        if (received.length() != 24)
            throw std::invalid_argument("tie_set: expected length 24");
        const Coset& coset = coset24_[syndrome24_bits(received.bits())];
        std::vector<BitWord> set;
        set.reserve(coset.count);
        for (std::uint32_t j = 0; j < coset.count; ++j)
            set.emplace_back(received.bits() ^ coset.leaders[j], 24);
        std::sort(set.begin(), set.end(),
                  [](BitWord a, BitWord b) { return a.bits() < b.bits(); });
        return set;
    }

    /// G24 decoding that refuses to guess: up to 3 errors are corrected; on
    /// a distance-4 tie the information positions pass through unchanged.
    BitWord decode24_passthrough(BitWord received) const {
        if (received.length() != 24)
            throw std::invalid_argument("decode24_passthrough: expected length 24");
        const Coset& coset = coset24_[syndrome24_bits(received.bits())];
        if (coset.count == 1)
            return BitWord((received.bits() ^ coset.leaders[0]) & kInfoMask, kInfoBits);
        return BitWord(received.bits() & kInfoMask, kInfoBits);
    }

    /// Decode a 24-symbol word by running the G23 decoder on its prefix and
    /// re-extending parity; the 24th symbol is ignored entirely.
    DecodeOutcome decode_d23_on_g24(BitWord received) const {
        if (received.length() != 24)
            throw std::invalid_argument("decode_d23_on_g24: expected length 24");
        const BitWord out = extend_parity(decode23(prefix23(received)).codeword);
        return {out, distance(received, out), 1};
    }

private:
    struct Coset {
        std::array<std::uint32_t, 6> leaders{};
        std::uint8_t count = 0;
        std::uint8_t weight = 0;
    };

    std::uint32_t syndrome23_bits(std::uint32_t y) const {
        return parity_of_info_[y & kInfoMask] ^ (y >> kInfoBits);
    }

    std::uint32_t syndrome24_bits(std::uint32_t y) const {
        return syndrome23_bits(y & 0x7FFFFFu) |
               ((static_cast<std::uint32_t>(std::popcount(y)) & 1u) << 11);
    }

    // G23 is perfect: the 2048 patterns of weight <= 3 hit each syndrome
    // exactly once, split 1/23/253/1771 by weight.
    void build_leaders23() {
        constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
        leader23_.fill(kUnset);
        std::array<std::size_t, 4> by_weight{};
        std::size_t filled = 0;
        for_each_pattern(23, 3, [&](std::uint32_t e, int w) {
            std::uint32_t& slot = leader23_[syndrome23_bits(e)];
            if (slot != kUnset)
                throw std::logic_error("GolayDecoder: syndrome collision among weight<=3 patterns");
            slot = e;
            ++by_weight[static_cast<std::size_t>(w)];
            ++filled;
        });
        if (filled != 2048 || by_weight != std::array<std::size_t, 4>{1, 23, 253, 1771})
            throw std::logic_error("GolayDecoder: G23 leader table has the wrong shape");
    }

    // Every G24 coset holds either a unique leader of weight <= 3 (2325
    // cosets: 1 + 24 + 276 + 2024) or exactly six leaders of weight 4
    // (the remaining 1771).
    void build_cosets24() {
        std::array<std::size_t, 5> cosets_by_weight{};
        for_each_pattern(24, 4, [&](std::uint32_t e, int w) {
            Coset& coset = coset24_[syndrome24_bits(e)];
            if (coset.count == 0) {
                coset.weight = static_cast<std::uint8_t>(w);
                ++cosets_by_weight[static_cast<std::size_t>(w)];
            } else if (coset.weight != w) {
                return;  // heavier than this coset's leaders; not a leader
            } else if (coset.count == 6) {
                throw std::logic_error("GolayDecoder: more than six leaders in one coset");
            }
            coset.leaders[coset.count++] = e;
        });
        bool shape_ok =
            cosets_by_weight == std::array<std::size_t, 5>{1, 24, 276, 2024, 1771};
        for (const Coset& coset : coset24_)
            shape_ok = shape_ok && (coset.weight == 4 ? coset.count == 6 : coset.count == 1);
        if (!shape_ok)
            throw std::logic_error("GolayDecoder: G24 coset table has the wrong shape");
    }

    /// Visit every pattern of weight 0..max_weight over n positions, in
    /// increasing weight, lexicographic within each weight.
    template <typename Fn>
    static void for_each_pattern(int n, int max_weight, Fn&& fn) {
        fn(0u, 0);
        for (int a = 0; a < n; ++a) {
            if (max_weight < 1) break;
            fn(1u << a, 1);
        }
        if (max_weight >= 2)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) fn((1u << a) | (1u << b), 2);
        if (max_weight >= 3)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c) fn((1u << a) | (1u << b) | (1u << c), 3);
        if (max_weight >= 4)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c)
                        for (int d = c + 1; d < n; ++d)
                            fn((1u << a) | (1u << b) | (1u << c) | (1u << d), 4);
    }

    std::array<std::uint16_t, kCodebookSize> parity_of_info_{};
    std::array<std::uint32_t, 2048> leader23_{};
    std::array<Coset, 4096> coset24_{};
};

/// The two codebooks plus the decoder built over them; the usual top-level
/// object for simulation and verification runs.
struct GolayCodes {
    Codebook g23 = build_g23();
    Codebook g24 = build_g24();
    GolayDecoder decoder{g23, g24};
};

}  // namespace golay
