#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace golay {

inline constexpr const char* kRngName = "philox4x32-10";

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// The 128-bit counter is laid out as (draw block, substream lo, substream
/// hi, stream), keyed by the 64-bit seed, so every (seed, stream, substream,
/// draw) tuple maps to one fixed word. Monte Carlo code gives each
/// operating point a stream and each trial a substream; results are then
/// independent of thread count and evaluation order by construction. One
/// substream yields 2^34 32-bit draws, far beyond any trial's appetite.
class Philox4x32 {
public:
    using result_type = std::uint32_t;

    Philox4x32(std::uint64_t seed, std::uint32_t stream, std::uint64_t substream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          ctr_{0, static_cast<std::uint32_t>(substream),
               static_cast<std::uint32_t>(substream >> 32), stream} {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return 0xFFFFFFFFu; }

    result_type operator()() {
        if (idx_ == 4) {
            block_ = encrypt(ctr_, key_);
            ++ctr_[0];
            idx_ = 0;
        }
        return block_[idx_++];
    }

    /// Uniform double in [0, 1) carrying 53 random bits.
    double uniform() {
        const std::uint64_t hi = (*this)();
        const std::uint64_t lo = (*this)();
        return static_cast<double>(((hi << 32) | lo) >> 11) * 0x1.0p-53;
    }

    /// One 10-round Philox4x32 block; exposed for known-answer tests.
    static std::array<std::uint32_t, 4> encrypt(std::array<std::uint32_t, 4> x,
                                                std::array<std::uint32_t, 2> k) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t m0 = 0xD2511F53ull * x[0];
            const std::uint64_t m1 = 0xCD9E8D57ull * x[2];
            x = {static_cast<std::uint32_t>(m1 >> 32) ^ x[1] ^ k[0],
                 static_cast<std::uint32_t>(m1),
                 static_cast<std::uint32_t>(m0 >> 32) ^ x[3] ^ k[1],
                 static_cast<std::uint32_t>(m0)};
            k[0] += 0x9E3779B9u;
            k[1] += 0xBB67AE85u;
        }
        return x;
    }

private:
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> ctr_;
    std::array<std::uint32_t, 4> block_{};
    int idx_ = 4;
};

/// Exactly uniform index in [0, n), by rejection — no modulo bias. Requires
/// a generator covering the full 32-bit range.
template <typename Urbg>
std::uint32_t uniform_index(Urbg& rng, std::uint32_t n) {
    static_assert(Urbg::min() == 0 && Urbg::max() == 0xFFFFFFFFu,
                  "uniform_index needs a full-range 32-bit generator");
    if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
    // First multiple of n that overflows 32 bits; 0 means everything is accepted.
    const std::uint32_t reject_from =
        static_cast<std::uint32_t>(0x100000000ull - 0x100000000ull % n);
    for (;;) {
        const std::uint32_t draw = rng();
        if (reject_from == 0 || draw < reject_from) return draw % n;
    }
}

}  // namespace golay
