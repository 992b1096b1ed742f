#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "bitword.hpp"
#include "codebook.hpp"
#include "rational.hpp"

namespace golay {

/// Outcome of one exhaustive verification. `cases` counts the instances
/// checked (subsets, cosets, grid points, ...); `detail` is a one-line
/// human-readable account of what was established.
struct CheckReport {
    std::string name;
    bool passed = false;
    std::uint64_t cases = 0;
    std::string detail;
};

namespace detail {

inline std::vector<std::uint32_t> octads(const Codebook& g24) {
    std::vector<std::uint32_t> w8;
    w8.reserve(759);
    for (const BitWord& c : g24.codewords)
        if (weight(c) == 8) w8.push_back(c.bits());
    return w8;
}

/// Visit every weight-4 pattern over 24 positions (10626 of them).
template <typename Fn>
void for_each_tetrad(Fn&& fn) {
    for (int a = 0; a < 24; ++a)
        for (int b = a + 1; b < 24; ++b)
            for (int c = b + 1; c < 24; ++c)
                for (int d = c + 1; d < 24; ++d)
                    fn((1u << a) | (1u << b) | (1u << c) | (1u << d));
}

}  // namespace detail

/// Steiner property S(5,8,24): every set of 5 positions lies in exactly one
/// weight-8 codeword. Exhaustive over all C(24,5) = 42504 position sets.
inline CheckReport verify_lemma_five_positions(const Codebook& g24) {
    const std::vector<std::uint32_t> w8 = detail::octads(g24);
    CheckReport report{"lemma_five_positions", true, 0, ""};
    for (int a = 0; a < 24; ++a)
        for (int b = a + 1; b < 24; ++b)
            for (int c = b + 1; c < 24; ++c)
                for (int d = c + 1; d < 24; ++d)
                    for (int e = d + 1; e < 24; ++e) {
                        const std::uint32_t m =
                            (1u << a) | (1u << b) | (1u << c) | (1u << d) | (1u << e);
                        int covers = 0;
                        for (std::uint32_t w : w8) covers += (w & m) == m;
                        report.passed = report.passed && covers == 1;
                        ++report.cases;
                    }
    report.detail = "each of the 42504 five-position sets lies in exactly one of the 759 "
                    "weight-8 codewords";
    report.passed = report.passed && report.cases == 42504 && w8.size() == 759;
    return report;
}

/// Every set of 4 positions lies in exactly five weight-8 codewords.
/// Exhaustive over all C(24,4) = 10626 position sets; the total count 53130
/// is cross-checked both ways: 5 * C(24,4) = 759 * C(8,4).
inline CheckReport verify_lemma_four_positions(const Codebook& g24) {
    const std::vector<std::uint32_t> w8 = detail::octads(g24);
    CheckReport report{"lemma_four_positions", true, 0, ""};
    std::uint64_t total = 0;
    detail::for_each_tetrad([&](std::uint32_t m) {
        int covers = 0;
        for (std::uint32_t w : w8) covers += (w & m) == m;
        report.passed = report.passed && covers == 5;
        total += static_cast<std::uint64_t>(covers);
        ++report.cases;
    });
    report.passed = report.passed && report.cases == 10626 && total == 53130 &&
                    total == 5 * binomial(24, 4) && total == 759 * binomial(8, 4);
    report.detail = "each of the 10626 four-position sets lies in exactly five weight-8 "
                    "codewords (53130 incidences = 5*C(24,4) = 759*C(8,4))";
    return report;
}

/// The counting argument behind the five-octad cover: growing a weight-4
/// set by one position in each of the 20 ways pins down a unique octad, and
/// those 20 octads are the set's five covers, each reached four times.
/// Checks a deterministic sample (every 50th tetrad), or all 10626.
inline CheckReport verify_lemma_counting(const Codebook& g24, bool exhaustive = false) {
    const std::vector<std::uint32_t> w8 = detail::octads(g24);
    CheckReport report{"lemma_counting", true, 0, ""};
    std::uint64_t index = 0;
    detail::for_each_tetrad([&](std::uint32_t m) {
        if (!exhaustive && index++ % 50 != 0) return;
        std::vector<std::uint32_t> hits;  // one octad per added position, 20 total
        for (int i = 0; i < 24; ++i) {
            if (m & (1u << i)) continue;
            const std::uint32_t m5 = m | (1u << i);
            std::uint32_t found = 0;
            int count = 0;
            for (std::uint32_t w : w8)
                if ((w & m5) == m5) {
                    found = w;
                    ++count;
                }
            if (count != 1) report.passed = false;
            hits.push_back(found);
        }
        std::sort(hits.begin(), hits.end());
        std::vector<std::uint32_t> distinct(hits);
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        bool ok = hits.size() == 20 && distinct.size() == 5;
        for (std::uint32_t w : distinct)
            ok = ok && std::count(hits.begin(), hits.end(), w) == 4 && (w & m) == m;
        report.passed = report.passed && ok;
        ++report.cases;
    });
    std::ostringstream os;
    os << report.cases << " weight-4 patterns: the 20 one-position extensions select the "
       << "pattern's five covering octads, each exactly four times";
    report.detail = os.str();
    return report;
}

/// Coset-leader structure of G24, exhaustively over one representative per
/// coset: every coset has either a unique leader of weight <= 3 (2325 =
/// 1 + 24 + 276 + 2024 cosets) or exactly six leaders of weight 4 (1771
/// cosets), and each sextet of leaders partitions the 24 positions.
inline CheckReport verify_theorem_cosets(const Codebook& g24) {
    CheckReport report{"theorem_cosets", true, 0, ""};
    std::array<std::uint64_t, 5> cosets_by_weight{};
    // Words with zero information part form a coset transversal: two of
    // them differ by a codeword only if that codeword has zero information
    // word, i.e. is zero.
    for (std::uint32_t t = 0; t < 4096; ++t) {
        const std::uint32_t rep = t << kInfoBits;
        int min_w = 25;
        std::uint32_t n_min = 0, support = 0;
        for (const BitWord& c : g24.codewords) {
            const int w = std::popcount(rep ^ c.bits());
            if (w < min_w) {
                min_w = w;
                n_min = 0;
                support = 0;
            }
            if (w == min_w) {
                ++n_min;
                support |= rep ^ c.bits();
            }
        }
        bool ok;
        if (min_w <= 3)
            ok = n_min == 1;
        else if (min_w == 4)
            // Disjointness of the six weight-4 leaders is equivalent to
            // their union covering all 24 positions.
            ok = n_min == 6 && support == 0xFFFFFFu;
        else
            ok = false;
        report.passed = report.passed && ok;
        ++cosets_by_weight[static_cast<std::size_t>(std::min(min_w, 4))];
        ++report.cases;
    }
    report.passed = report.passed &&
                    cosets_by_weight == std::array<std::uint64_t, 5>{1, 24, 276, 2024, 1771};
    report.detail = "4096 cosets: 1+24+276+2024 with a unique leader of weight 0..3, 1771 "
                    "with six weight-4 leaders partitioning the 24 positions";
    return report;
}

/// G23 is perfect: every coset has a unique leader of weight <= 3, so the
/// radius-3 spheres around codewords tile all of F_2^23
/// (2048 = 1 + 23 + 253 + 1771 = C(23,0)+C(23,1)+C(23,2)+C(23,3)).
inline CheckReport verify_perfect_g23(const Codebook& g23) {
    CheckReport report{"perfect_g23", true, 0, ""};
    std::array<std::uint64_t, 4> cosets_by_weight{};
    for (std::uint32_t t = 0; t < 2048; ++t) {
        const std::uint32_t rep = t << kInfoBits;
        int min_w = 24;
        std::uint32_t n_min = 0;
        for (const BitWord& c : g23.codewords) {
            const int w = std::popcount(rep ^ c.bits());
            if (w < min_w) {
                min_w = w;
                n_min = 0;
            }
            n_min += w == min_w;
        }
        report.passed = report.passed && min_w <= 3 && n_min == 1;
        if (min_w <= 3) ++cosets_by_weight[static_cast<std::size_t>(min_w)];
        ++report.cases;
    }
    report.passed = report.passed &&
                    cosets_by_weight == std::array<std::uint64_t, 4>{1, 23, 253, 1771};
    report.detail = "2048 cosets, each with a unique leader of weight <= 3, split "
                    "1/23/253/1771 by weight — the radius-3 spheres tile F_2^23";
    return report;
}

/// The G24 decoder and the prefix decoder have identical codeword error
/// rates: exactly, because (5/6) C(24,4) = C(23,4) = 5 C(23,3) = 8855, and
/// numerically across a 1000-point crossover grid in [0, 1/2].
inline CheckReport verify_cwer_identity() {
    CheckReport report{"cwer_identity", true, 0, ""};
    report.passed = (5 * binomial(24, 4) == 6 * binomial(23, 4)) &&
                    binomial(23, 4) == 8855 && 5 * binomial(23, 3) == 8855;
    double max_diff = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double p = 0.5 * static_cast<double>(i) / 999.0;
        max_diff = std::max(max_diff, std::abs(cwer_g24(p) - cwer_d23_on_g24(p)));
        ++report.cases;
    }
    report.passed = report.passed && max_diff <= 1e-12;
    std::ostringstream os;
    os << "(5/6)C(24,4) = C(23,4) = 5 C(23,3) = 8855; max |cwer_g24 - cwer_d23_on_g24| = "
       << max_diff << " over 1000 crossover points in [0, 1/2]";
    report.detail = os.str();
    return report;
}

/// Exact tie-event statistics of the G24 decoder, by enumerating all 10626
/// weight-4 error patterns (each tie set is the zero codeword plus the five
/// octads covering the pattern).
struct AgreementConstants {
    /// E[systematic errors | wrong codeword], agreement tie-breaking.
    Rational agreement_sys_errors;
    /// Probability the agreement rule picks the transmitted codeword.
    Rational correct_pick_probability;
    /// E[systematic errors | wrong codeword], uniform tie-breaking (= 4).
    Rational random_sys_errors;
};

inline AgreementConstants compute_agreement_constant(const Codebook& g24) {
    const std::vector<std::uint32_t> w8 = detail::octads(g24);
    // Transmit the zero codeword without loss of generality (the policy is
    // translation covariant), so the received word IS the error pattern and
    // a candidate's systematic errors are the weight of its information part.
    Rational wrong_mass(0), wrong_sys(0), correct_mass(0), random_sys(0);
    std::uint64_t patterns = 0;
    detail::for_each_tetrad([&](std::uint32_t y) {
        std::array<std::uint32_t, 6> cand{};  // nearest codewords; cand[0] = transmitted
        std::uint32_t n = 1;
        for (std::uint32_t w : w8)
            if ((w & y) == y) cand[n++] = w;
        if (n != 6) throw std::logic_error("compute_agreement_constant: tie set is not six");
        // Agreement score: disagreements with the received word on the 12
        // information positions. Minimizers share the pick uniformly.
        std::array<int, 6> score{};
        int best = kInfoBits + 1;
        for (std::uint32_t j = 0; j < 6; ++j) {
            score[j] = std::popcount((cand[j] ^ y) & kInfoMask);
            best = std::min(best, score[j]);
        }
        int nbest = 0;
        for (std::uint32_t j = 0; j < 6; ++j) nbest += score[j] == best;
        const Rational share(1, nbest);
        for (std::uint32_t j = 0; j < 6; ++j) {
            const int sys = std::popcount(cand[j] & kInfoMask);
            if (j > 0) random_sys += Rational(sys, 6);
            if (score[j] != best) continue;
            if (j == 0)
                correct_mass += share;
            else {
                wrong_mass += share;
                wrong_sys += share * sys;
            }
        }
        ++patterns;
    });
    return {wrong_sys / wrong_mass, correct_mass / Rational(static_cast<long long>(patterns)),
            random_sys / (Rational(5, 6) * static_cast<long long>(patterns))};
}

/// Exact tie-event statistics of the passthrough rule: expected systematic
/// errors per tie event (= 2: four crossovers spread uniformly, half the
/// positions are systematic), the same average over the parity half as a
/// symmetry check, and the codeword-decoder value (5/6) * agreement for
/// comparison.
struct PassthroughConstants {
    Rational passthrough_sys_errors;
    Rational parity_half_errors;
    Rational codeword_decoder_sys_errors;  // (5/6) * agreement constant
};

inline PassthroughConstants compute_passthrough_constant(const AgreementConstants& agreement) {
    Rational sys(0), par(0);
    std::uint64_t patterns = 0;
    detail::for_each_tetrad([&](std::uint32_t y) {
        sys += std::popcount(y & kInfoMask);
        par += std::popcount(y & ~kInfoMask);
        ++patterns;
    });
    const Rational n(static_cast<long long>(patterns));
    return {sys / n, par / n, Rational(5, 6) * agreement.agreement_sys_errors};
}

/// The agreement constants as a report; the pass condition is the pair of
/// provable identities (correct pick = 1/6, uniform tie-breaking averages
/// exactly 4), with the agreement value itself carried in the detail line.
inline CheckReport agreement_constant_report(const Codebook& g24) {
    const AgreementConstants agreement = compute_agreement_constant(g24);
    CheckReport report{"agreement_constant", true, 10626, ""};
    report.passed = agreement.correct_pick_probability == Rational(1, 6) &&
                    agreement.random_sys_errors == Rational(4);
    report.detail = "E[systematic errors | wrong codeword] = " +
                    to_string(agreement.agreement_sys_errors) + " ~= " +
                    std::to_string(to_double(agreement.agreement_sys_errors)) +
                    " with agreement tie-breaking; correct pick probability = " +
                    to_string(agreement.correct_pick_probability) +
                    "; uniform tie-breaking average = " +
                    to_string(agreement.random_sys_errors);
    return report;
}

/// The passthrough constant as a report; passes iff both coordinate halves
/// average exactly 2 systematic errors per tie event.
inline CheckReport passthrough_constant_report(const Codebook& g24) {
    const AgreementConstants agreement = compute_agreement_constant(g24);
    const PassthroughConstants pass = compute_passthrough_constant(agreement);
    CheckReport report{"passthrough_constant", true, 10626, ""};
    report.passed = pass.passthrough_sys_errors == Rational(2) &&
                    pass.parity_half_errors == Rational(2);
    report.detail = "passthrough systematic errors per tie event = " +
                    to_string(pass.passthrough_sys_errors) + " (parity half " +
                    to_string(pass.parity_half_errors) +
                    "); codeword-decoder comparison (5/6)*" +
                    to_string(agreement.agreement_sys_errors) + " = " +
                    to_string(pass.codeword_decoder_sys_errors) + " ~= " +
                    std::to_string(to_double(pass.codeword_decoder_sys_errors));
    return report;
}

/// Every check above, in a fixed order.
inline std::vector<CheckReport> run_all_checks(const Codebook& g23, const Codebook& g24) {
    return {verify_perfect_g23(g23),       verify_lemma_five_positions(g24),
            verify_lemma_four_positions(g24), verify_lemma_counting(g24),
            verify_theorem_cosets(g24),    verify_cwer_identity(),
            agreement_constant_report(g24), passthrough_constant_report(g24)};
}

}  // namespace golay
