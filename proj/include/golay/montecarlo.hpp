#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

#include "analysis.hpp"
#include "decoder.hpp"
#include "rng.hpp"

namespace golay {

enum class DecoderKind { ml23, ml24_random, ml24_agreement, passthrough24, d23_on_g24 };

inline constexpr std::string_view decoder_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::ml23: return "ml23";
        case DecoderKind::ml24_random: return "ml24_random";
        case DecoderKind::ml24_agreement: return "ml24_agreement";
        case DecoderKind::passthrough24: return "passthrough24";
        case DecoderKind::d23_on_g24: return "d23_on_g24";
    }
    return "?";
}

inline std::optional<DecoderKind> decoder_from_name(std::string_view name) {
    for (DecoderKind kind : {DecoderKind::ml23, DecoderKind::ml24_random,
                             DecoderKind::ml24_agreement, DecoderKind::passthrough24,
                             DecoderKind::d23_on_g24})
        if (name == decoder_name(kind)) return kind;
    return std::nullopt;
}

inline constexpr int block_length(DecoderKind kind) {
    return kind == DecoderKind::ml23 ? 23 : 24;
}

inline Rational code_rate(DecoderKind kind) { return Rational(kInfoBits, block_length(kind)); }

/// Stop once this many codeword errors have been seen, or at max_trials,
/// whichever comes first.
struct StopRule {
    std::uint64_t min_codeword_errors = 100;
    std::uint64_t max_trials = 100'000'000;
};

/// One operating point: the BSC crossover actually simulated, plus the
/// Eb/N0 it was derived from (NaN when the point was requested as a raw p).
struct SimPoint {
    double p = 0.0;
    double ebno_db = std::numeric_limits<double>::quiet_NaN();
};

struct SimConfig {
    DecoderKind decoder = DecoderKind::ml23;
    std::uint64_t seed = 1;
    StopRule stop;
    bool all_zero_codeword = false;  // default: fresh uniform information word per trial
    int jobs = 1;
};

struct SimResult {
    SimPoint point;
    std::uint64_t trials = 0;
    std::uint64_t codeword_errors = 0;
    std::uint64_t info_bit_errors = 0;
    std::uint64_t tie_events = 0;
    std::uint64_t tie_info_errors = 0;  // info-bit errors within tie-event trials
    double cwer = 0, cwer_lo = 0, cwer_hi = 0;
    double ber = 0, ber_lo = 0, ber_hi = 0;
    double sys_errors_per_cw_error = 0;  // NaN until a codeword error is seen
    double sys_errors_per_tie_event = 0;  // NaN until a tie event is seen
};

/// 95% Wilson score interval for a binomial proportion.
struct WilsonInterval {
    double lo = 0, hi = 1;
};

inline WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t n,
                                      double z = 1.959963984540054) {
    if (n == 0) return {0.0, 1.0};
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = phat + z2 / (2.0 * nn);
    const double radius = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
    return {std::max(0.0, (center - radius) / denom),
            std::min(1.0, (center + radius) / denom)};
}

namespace detail {

struct TrialOutcome {
    bool codeword_error = false;
    bool tie_event = false;
    std::uint8_t info_bit_errors = 0;
};

/// One encode -> BSC -> decode round trip. A pure function of
/// (seed, point_index, trial): every random draw comes from the trial's own
/// counter-based substream, which also feeds the tie-break policy.
inline TrialOutcome run_trial(const GolayCodes& codes, DecoderKind kind, double p,
                              bool all_zero, std::uint64_t seed, std::uint32_t point_index,
                              std::uint64_t trial) {
    Philox4x32 rng(seed, point_index, trial);
    const int n = block_length(kind);
    const Codebook& cb = kind == DecoderKind::ml23 ? codes.g23 : codes.g24;
    const BitWord tx = all_zero ? cb.codewords[0]
                                : cb.codewords[rng() & kInfoMask];
    std::uint32_t flips = 0;
    for (int i = 0; i < n; ++i)
        flips |= static_cast<std::uint32_t>(rng.uniform() < p) << i;
    const BitWord rx(tx.bits() ^ flips, n);

    TrialOutcome out;
    BitWord decoded_info(0, kInfoBits);
    switch (kind) {
        case DecoderKind::ml23: {
            decoded_info = info_word(codes.decoder.decode23(rx).codeword);
            break;
        }
        case DecoderKind::ml24_random:
        case DecoderKind::ml24_agreement: {
            const TieBreak policy = kind == DecoderKind::ml24_random
                                        ? TieBreak::random_uniform
                                        : TieBreak::systematic_agreement;
            const DecodeOutcome o = codes.decoder.decode24(rx, policy, rng);
            out.tie_event = o.tie_set_size == 6;
            decoded_info = info_word(o.codeword);
            break;
        }
        case DecoderKind::passthrough24: {
            out.tie_event = codes.decoder.tie_set_size(rx) == 6;
            decoded_info = codes.decoder.decode24_passthrough(rx);
            break;
        }
        case DecoderKind::d23_on_g24: {
            decoded_info = info_word(codes.decoder.decode_d23_on_g24(rx).codeword);
            break;
        }
    }
    out.info_bit_errors =
        static_cast<std::uint8_t>(distance(decoded_info, info_word(tx)));
    out.codeword_error = out.info_bit_errors != 0;
    return out;
}

}  // namespace detail

/// Simulate one operating point. Trials are evaluated in fixed-size chunks
/// (sharded across `jobs` threads) but accounted strictly in trial order,
/// stopping at the first trial where the stop rule is met — so the result
/// is the same for every job count: the unique minimal-trial-count answer.
inline SimResult run_point(const GolayCodes& codes, const SimConfig& cfg, SimPoint point,
                           std::uint32_t point_index) {
    if (!(point.p > 0.0 && point.p <= 0.5))
        throw std::invalid_argument("run_point: crossover probability must lie in (0, 1/2]");
    if (cfg.jobs < 1 || cfg.jobs > 256)
        throw std::invalid_argument("run_point: jobs must lie in [1, 256]");
    if (cfg.stop.min_codeword_errors == 0 || cfg.stop.max_trials == 0)
        throw std::invalid_argument("run_point: stop rule must be positive");

    SimResult r;
    r.point = point;
    const std::uint64_t chunk =
        4096ull * static_cast<std::uint64_t>(std::max(4, cfg.jobs));
    std::vector<detail::TrialOutcome> outcomes;
    bool done = false;
    for (std::uint64_t base = 0; base < cfg.stop.max_trials && !done; base += chunk) {
        const std::uint64_t count = std::min(chunk, cfg.stop.max_trials - base);
        outcomes.assign(static_cast<std::size_t>(count), {});
        auto stripe = [&](std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t t = lo; t < hi; ++t)
                outcomes[static_cast<std::size_t>(t)] =
                    detail::run_trial(codes, cfg.decoder, point.p, cfg.all_zero_codeword,
                                      cfg.seed, point_index, base + t);
        };
        if (cfg.jobs == 1) {
            stripe(0, count);
        } else {
            std::vector<std::thread> pool;
            std::exception_ptr failure;
            std::mutex failure_mutex;
            const std::uint64_t jobs = static_cast<std::uint64_t>(cfg.jobs);
            for (std::uint64_t j = 1; j < jobs; ++j)
                pool.emplace_back([&, j] {
                    try {
                        stripe(count * j / jobs, count * (j + 1) / jobs);
                    } catch (...) {
                        const std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                });
            stripe(0, count * 1 / jobs);
            for (std::thread& th : pool) th.join();
            if (failure) std::rethrow_exception(failure);
        }
        for (std::uint64_t t = 0; t < count && !done; ++t) {
            const detail::TrialOutcome& o = outcomes[static_cast<std::size_t>(t)];
            ++r.trials;
            r.codeword_errors += o.codeword_error;
            r.info_bit_errors += o.info_bit_errors;
            r.tie_events += o.tie_event;
            if (o.tie_event) r.tie_info_errors += o.info_bit_errors;
            done = r.codeword_errors >= cfg.stop.min_codeword_errors;
        }
    }

    r.cwer = static_cast<double>(r.codeword_errors) / static_cast<double>(r.trials);
    const WilsonInterval wi = wilson_interval(r.codeword_errors, r.trials);
    r.cwer_lo = wi.lo;
    r.cwer_hi = wi.hi;
    const std::uint64_t bits = r.trials * kInfoBits;
    r.ber = static_cast<double>(r.info_bit_errors) / static_cast<double>(bits);
    const WilsonInterval bi = wilson_interval(r.info_bit_errors, bits);
    r.ber_lo = bi.lo;
    r.ber_hi = bi.hi;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    r.sys_errors_per_cw_error =
        r.codeword_errors ? static_cast<double>(r.info_bit_errors) /
                                static_cast<double>(r.codeword_errors)
                          : nan;
    r.sys_errors_per_tie_event =
        r.tie_events ? static_cast<double>(r.tie_info_errors) /
                           static_cast<double>(r.tie_events)
                     : nan;
    return r;
}

/// Simulate a list of points; point i draws from RNG stream i, so the
/// points are statistically independent and individually reproducible.
inline std::vector<SimResult> run_curve(const GolayCodes& codes, const SimConfig& cfg,
                                        const std::vector<SimPoint>& points) {
    std::vector<SimResult> results;
    results.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        results.push_back(run_point(codes, cfg, points[i], static_cast<std::uint32_t>(i)));
    return results;
}

/// Operating points for an Eb/N0 grid at the decoder's code rate.
inline std::vector<SimPoint> points_for_grid(DecoderKind kind,
                                             const std::vector<double>& ebno_db_grid) {
    std::vector<SimPoint> points;
    points.reserve(ebno_db_grid.size());
    const Rational rate = code_rate(kind);
    for (double e : ebno_db_grid) points.push_back({bsc_p(e, rate), e});
    return points;
}

}  // namespace golay
