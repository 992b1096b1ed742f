#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "rational.hpp"

namespace golay {

/// Gaussian tail Q(x) = P(N(0,1) > x), via the complementary error
/// function, so small tails keep full relative precision.
inline double q_function(double x) {
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

/// Exact binomial coefficient; every intermediate division is exact.
constexpr std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

/// BSC crossover probability of BPSK over AWGN with hard decisions:
///   p = Q(sqrt(2 R Eb/N0)),  Eb/N0 given in dB.
inline double bsc_p(double ebno_db, const Rational& rate) {
    if (rate <= 0 || rate > 1)
        throw std::invalid_argument("bsc_p: rate must lie in (0, 1]");
    return q_function(std::sqrt(2.0 * to_double(rate) * std::pow(10.0, ebno_db / 10.0)));
}

namespace detail {

inline void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("crossover probability must lie in [0, 1]");
}

/// Upper tail sum_{i=t}^{n} C(n,i) p^i (1-p)^(n-i). All terms are
/// nonnegative (no cancellation) and are added smallest-first.
inline double binomial_tail(int n, int t, double p) {
    double s = 0.0;
    for (int i = n; i >= t; --i)
        s += static_cast<double>(binomial(n, i)) * std::pow(p, i) * std::pow(1.0 - p, n - i);
    return std::min(s, 1.0);
}

}  // namespace detail

/// Codeword error rate of the G23 decoder on a BSC: exactly the chance of
/// four or more crossovers in 23 symbols (the code corrects up to three).
inline double cwer_g23(double p) {
    detail::check_p(p);
    return detail::binomial_tail(23, 4, p);
}

/// Codeword error rate of the maximum-likelihood G24 decoder: five or more
/// crossovers always mislead it, four crossovers mislead it with
/// probability 5/6 (the tie set holds six candidates, one correct). The
/// tie-break policy has no effect here — it only changes which wrong
/// codeword is delivered.
inline double cwer_g24(double p) {
    detail::check_p(p);
    const double four = static_cast<double>(binomial(24, 4)) * std::pow(p, 4) *
                        std::pow(1.0 - p, 20);
    return std::min((5.0 / 6.0) * four + detail::binomial_tail(24, 5, p), 1.0);
}

/// Codeword error rate of the prefix decoder on G24 transmissions (decode
/// the first 23 symbols, ignore the 24th): the prefix is a G23 word, so
/// this is cwer_g23 — and algebraically identical to cwer_g24, since
/// (5/6) C(24,4) = C(23,4) absorbs the split binomial term.
inline double cwer_d23_on_g24(double p) {
    detail::check_p(p);
    return detail::binomial_tail(23, 4, p);
}

/// Information-bit error rate of the G23 decoder: a wrong codeword is off
/// by at least the minimum distance 7, i.e. a fraction 7/23 of symbols, and
/// the systematic positions carry their proportional share.
inline double ber_g23(double p) {
    return (7.0 / 23.0) * cwer_g23(p);
}

/// Information-bit BER of the G24 decoder with uniform tie-breaking: a
/// wrong codeword carries 4 expected systematic errors out of 12.
inline double ber_g24_random(double p) {
    return (1.0 / 3.0) * cwer_g24(p);
}

/// Information-bit BER of the G24 decoder with agreement tie-breaking.
/// `beta` is the expected fraction of systematic positions in error given a
/// wrong codeword; use the exact tie-set enumeration value
/// (compute_agreement_constant() / 12), not a rounded figure.
inline double ber_g24_agreement(double p, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("ber_g24_agreement: beta must lie in [0, 1]");
    return beta * cwer_g24(p);
}

/// BER of uncoded BPSK at the given Eb/N0 (rate 1).
inline double uncoded_ber(double ebno_db) { return bsc_p(ebno_db, Rational(1)); }

/// Shannon limit for rate-R signalling over the bandlimited AWGN channel:
/// the minimum Eb/N0 (dB) at which capacity reaches R, from
/// C = (1/2) log2(1 + 2 R Eb/N0) >= R.
inline double capacity_ebno_db(const Rational& rate) {
    if (rate <= 0 || rate > 1)
        throw std::invalid_argument("capacity_ebno_db: rate must lie in (0, 1]");
    const double r = to_double(rate);
    return 10.0 * std::log10((std::exp2(2.0 * r) - 1.0) / (2.0 * r));
}

/// Smallest Eb/N0 (dB) at which `curve` — a nonincreasing function of
/// Eb/N0 — drops to `target`, by bisection to within tol_db.
inline double ebno_at_target(const std::function<double(double)>& curve, double target,
                             double lo_db = -5.0, double hi_db = 15.0,
                             double tol_db = 1e-4) {
    if (!(target > 0.0) || !(tol_db > 0.0) || !(lo_db < hi_db))
        throw std::invalid_argument("ebno_at_target: bad target, tolerance, or bracket");
    if (curve(lo_db) < target || curve(hi_db) > target)
        throw std::domain_error("ebno_at_target: curve does not cross the target in the bracket");
    while (hi_db - lo_db > tol_db) {
        const double mid = 0.5 * (lo_db + hi_db);
        (curve(mid) >= target ? lo_db : hi_db) = mid;
    }
    return 0.5 * (lo_db + hi_db);
}

}  // namespace golay
