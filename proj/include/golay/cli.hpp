#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "analysis.hpp"
#include "codebook.hpp"
#include "decoder.hpp"
#include "montecarlo.hpp"
#include "verify.hpp"

namespace golay {

namespace cli_detail {

using json = nlohmann::ordered_json;

/// Shortest round-trippable decimal with 12 significant digits; NaN prints
/// as "nan". Used for every numeric field so output is byte-reproducible.
inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// Inclusive dB grid "start:stop:step".
inline std::vector<double> parse_grid(const std::string& spec) {
    double start = 0, stop = 0, step = 0;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &tail) != 3 ||
        !(step > 0.0) || stop < start)
        throw CLI::ValidationError("--grid", "expected start:stop:step with step > 0, got '" +
                                                 spec + "'");
    std::vector<double> values;
    const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (int i = 0; i < count; ++i) values.push_back(start + i * step);
    return values;
}

inline constexpr const char* kGeneratorNote =
    "g(x) = x^11+x^10+x^6+x^5+x^4+x^2+1 (0xC75); information positions 0..11, "
    "cyclic parity 12..22, overall parity 23";

struct CurvesOptions {
    std::string grid = "0:12:0.25";
    std::string format = "csv";
};

inline int cmd_curves(const CurvesOptions& opt, std::ostream& out) {
    const std::vector<double> grid = parse_grid(opt.grid);
    const Codebook g24 = build_g24();
    const AgreementConstants agreement = compute_agreement_constant(g24);
    const Rational beta = agreement.agreement_sys_errors / kInfoBits;
    const double beta_d = to_double(beta);
    const bool below_valid = !grid.empty() && grid.front() < 1.0;
    const Rational r23(kInfoBits, 23), r24(kInfoBits, 24);

    struct Row {
        double ebno_db, p_g23, p_g24, cwer_g23, cwer_g24, ber_uncoded, ber_g23,
            ber_g24_random, ber_g24_agreement;
    };
    std::vector<Row> rows;
    for (double e : grid) {
        const double p23 = bsc_p(e, r23), p24 = bsc_p(e, r24);
        rows.push_back({e, p23, p24, cwer_g23(p23), cwer_g24(p24), uncoded_ber(e),
                        ber_g23(p23), ber_g24_random(p24), ber_g24_agreement(p24, beta_d)});
    }

    if (opt.format == "json") {
        json meta;
        meta["generator"] = kGeneratorNote;
        meta["agreement_beta_exact"] = to_string(beta);
        meta["agreement_beta"] = beta_d;
        if (below_valid) meta["warning"] = "analytic BER approximations are loose below 1 dB";
        json jrows = json::array();
        for (const Row& r : rows)
            jrows.push_back({{"ebno_db", r.ebno_db},
                             {"p_g23", r.p_g23},
                             {"p_g24", r.p_g24},
                             {"cwer_g23", r.cwer_g23},
                             {"cwer_g24", r.cwer_g24},
                             {"ber_uncoded", r.ber_uncoded},
                             {"ber_g23", r.ber_g23},
                             {"ber_g24_random", r.ber_g24_random},
                             {"ber_g24_agreement", r.ber_g24_agreement}});
        out << json{{"metadata", meta}, {"rows", jrows}}.dump(2) << '\n';
        return 0;
    }
    out << "# golay curves\n";
    out << "# generator: " << kGeneratorNote << '\n';
    out << "# agreement beta: " << to_string(beta) << " ~= " << num(beta_d)
        << " (exact tie-set enumeration)\n";
    if (below_valid) out << "# warning: analytic BER approximations are loose below 1 dB\n";
    out << "ebno_db,p_g23,p_g24,cwer_g23,cwer_g24,ber_uncoded,ber_g23,ber_g24_random,"
           "ber_g24_agreement\n";
    for (const Row& r : rows)
        out << num(r.ebno_db) << ',' << num(r.p_g23) << ',' << num(r.p_g24) << ','
            << num(r.cwer_g23) << ',' << num(r.cwer_g24) << ',' << num(r.ber_uncoded) << ','
            << num(r.ber_g23) << ',' << num(r.ber_g24_random) << ','
            << num(r.ber_g24_agreement) << '\n';
    return 0;
}

struct SimulateOptions {
    std::string decoder;
    std::string grid;          // exactly one of grid / p_list
    std::vector<double> p_list;
    std::uint64_t seed = 1;
    std::uint64_t min_errors = 100;
    std::uint64_t max_trials = 100'000'000;
    bool all_zero = false;
    int jobs = 1;
    std::string format = "csv";
};

inline int cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
    const std::optional<DecoderKind> kind = decoder_from_name(opt.decoder);
    if (!kind)
        throw CLI::ValidationError("--decoder", "unknown decoder '" + opt.decoder + "'");

    SimConfig cfg;
    cfg.decoder = *kind;
    cfg.seed = opt.seed;
    cfg.stop = {opt.min_errors, opt.max_trials};
    cfg.all_zero_codeword = opt.all_zero;
    cfg.jobs = opt.jobs;

    std::vector<SimPoint> points;
    if (!opt.grid.empty()) {
        points = points_for_grid(cfg.decoder, parse_grid(opt.grid));
    } else {
        for (double p : opt.p_list) points.push_back({p, std::nan("")});
    }

    const GolayCodes codes;
    const std::vector<SimResult> results = run_curve(codes, cfg, points);

    std::ostringstream stop;
    stop << "min_errors=" << opt.min_errors << " max_trials=" << opt.max_trials;
    const char* mode = opt.all_zero ? "all-zero codeword" : "uniform random information words";
    if (opt.format == "json") {
        json meta{{"decoder", std::string(decoder_name(cfg.decoder))},
                  {"seed", cfg.seed},
                  {"rng", kRngName},
                  {"stop", stop.str()},
                  {"mode", mode}};
        json jrows = json::array();
        for (const SimResult& r : results)
            jrows.push_back({{"ebno_db", r.point.ebno_db},
                             {"p", r.point.p},
                             {"trials", r.trials},
                             {"codeword_errors", r.codeword_errors},
                             {"info_bit_errors", r.info_bit_errors},
                             {"tie_events", r.tie_events},
                             {"cwer", r.cwer},
                             {"cwer_lo", r.cwer_lo},
                             {"cwer_hi", r.cwer_hi},
                             {"ber", r.ber},
                             {"ber_lo", r.ber_lo},
                             {"ber_hi", r.ber_hi},
                             {"sys_errors_per_cw_error", r.sys_errors_per_cw_error},
                             {"sys_errors_per_tie_event", r.sys_errors_per_tie_event}});
        out << json{{"metadata", meta}, {"rows", jrows}}.dump(2) << '\n';
        return 0;
    }
    out << "# golay simulate\n";
    out << "# decoder: " << decoder_name(cfg.decoder) << '\n';
    out << "# seed: " << cfg.seed << '\n';
    out << "# rng: " << kRngName << '\n';
    out << "# stop: " << stop.str() << '\n';
    out << "# mode: " << mode << '\n';
    out << "ebno_db,p,trials,codeword_errors,info_bit_errors,tie_events,cwer,cwer_lo,cwer_hi,"
           "ber,ber_lo,ber_hi,sys_errors_per_cw_error,sys_errors_per_tie_event\n";
    for (const SimResult& r : results)
        out << num(r.point.ebno_db) << ',' << num(r.point.p) << ',' << r.trials << ','
            << r.codeword_errors << ',' << r.info_bit_errors << ',' << r.tie_events << ','
            << num(r.cwer) << ',' << num(r.cwer_lo) << ',' << num(r.cwer_hi) << ','
            << num(r.ber) << ',' << num(r.ber_lo) << ',' << num(r.ber_hi) << ','
            << num(r.sys_errors_per_cw_error) << ',' << num(r.sys_errors_per_tie_event)
            << '\n';
    return 0;
}

struct VerifyOptions {
    std::string only;
    std::string format = "human";
    bool exhaustive = false;
    bool inject_fault = false;  // hidden test hook: corrupt one codeword per codebook
};

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    Codebook g23 = build_g23();
    Codebook g24 = build_g24();
    if (opt.inject_fault) {
        g23.codewords[1] = BitWord(g23.codewords[1].bits() ^ 1u, 23);
        g24.codewords[1] = BitWord(g24.codewords[1].bits() ^ 1u, 24);
    }

    const std::map<std::string, std::function<CheckReport()>> checks{
        {"perfect_g23", [&] { return verify_perfect_g23(g23); }},
        {"lemma_five_positions", [&] { return verify_lemma_five_positions(g24); }},
        {"lemma_four_positions", [&] { return verify_lemma_four_positions(g24); }},
        {"lemma_counting", [&] { return verify_lemma_counting(g24, opt.exhaustive); }},
        {"theorem_cosets", [&] { return verify_theorem_cosets(g24); }},
        {"cwer_identity", [&] { return verify_cwer_identity(); }},
        {"agreement_constant", [&] { return agreement_constant_report(g24); }},
        {"passthrough_constant", [&] { return passthrough_constant_report(g24); }},
    };

    std::vector<CheckReport> reports;
    if (opt.only.empty()) {
        reports = run_all_checks(g23, g24);
        if (opt.exhaustive)
            for (CheckReport& r : reports)
                if (r.name == "lemma_counting") r = verify_lemma_counting(g24, true);
    } else if (auto it = checks.find(opt.only); it != checks.end()) {
        reports.push_back(it->second());
    } else {
        std::string names;
        for (const auto& [name, fn] : checks) names += (names.empty() ? "" : ", ") + name;
        throw CLI::ValidationError("--only", "unknown check '" + opt.only + "' (known: " +
                                                 names + ")");
    }

    bool all_passed = true;
    for (const CheckReport& r : reports) all_passed = all_passed && r.passed;
    if (opt.format == "json") {
        json jreports = json::array();
        for (const CheckReport& r : reports)
            jreports.push_back({{"name", r.name},
                                {"passed", r.passed},
                                {"cases", r.cases},
                                {"detail", r.detail}});
        out << json{{"checks", jreports}, {"all_passed", all_passed}}.dump(2) << '\n';
    } else {
        for (const CheckReport& r : reports)
            out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.cases
                << " cases)  " << r.detail << '\n';
        out << (all_passed ? "all checks passed" : "CHECK FAILURES PRESENT") << '\n';
    }
    return all_passed ? 0 : 1;
}

struct FiguresOptions {
    std::string format = "json";
};

inline int cmd_figures(const FiguresOptions&, std::ostream& out) {
    const Codebook g24 = build_g24();
    const AgreementConstants agreement = compute_agreement_constant(g24);
    const PassthroughConstants pass = compute_passthrough_constant(agreement);
    const Rational beta = agreement.agreement_sys_errors / kInfoBits;
    const Rational r23(kInfoBits, 23), r24(kInfoBits, 24);

    const double ber_target = 1e-6, cwer_target = 1e-4;
    const double e_unc = ebno_at_target([](double e) { return uncoded_ber(e); }, ber_target);
    const double e_23 =
        ebno_at_target([&](double e) { return ber_g23(bsc_p(e, r23)); }, ber_target);
    const double e_24r =
        ebno_at_target([&](double e) { return ber_g24_random(bsc_p(e, r24)); }, ber_target);
    const double e_24a = ebno_at_target(
        [&](double e) { return ber_g24_agreement(bsc_p(e, r24), to_double(beta)); },
        ber_target);
    const double e_cap = capacity_ebno_db(Rational(1, 2));
    const double c23 =
        ebno_at_target([&](double e) { return cwer_g23(bsc_p(e, r23)); }, cwer_target);
    const double c24 =
        ebno_at_target([&](double e) { return cwer_g24(bsc_p(e, r24)); }, cwer_target);

    auto exact = [](const Rational& r) {
        return json{{"exact", to_string(r)}, {"value", to_double(r)}};
    };
    const json doc{
        {"ber_target", ber_target},
        {"uncoded_ebno_db", e_unc},
        {"g23_ebno_db", e_23},
        {"g24_random_ebno_db", e_24r},
        {"g24_agreement_ebno_db", e_24a},
        {"coding_gain_db", e_unc - e_24a},
        {"coding_gain_db_random", e_unc - e_24r},
        {"capacity_ebno_db", e_cap},
        {"capacity_gap_db", e_24a - e_cap},
        {"capacity_gap_db_random", e_24r - e_cap},
        {"ber_separation_db", e_24a - e_23},
        {"cwer_target", cwer_target},
        {"cwer_separation_db", c24 - c23},
        {"agreement_sys_errors_per_cw_error", exact(agreement.agreement_sys_errors)},
        {"correct_pick_probability", exact(agreement.correct_pick_probability)},
        {"random_sys_errors_per_cw_error", exact(agreement.random_sys_errors)},
        {"agreement_beta", exact(beta)},
        {"passthrough_sys_errors_per_tie_event", exact(pass.passthrough_sys_errors)},
        {"codeword_decoder_sys_errors_per_tie_event",
         exact(pass.codeword_decoder_sys_errors)},
    };
    out << doc.dump(2) << '\n';
    return 0;
}

}  // namespace cli_detail

/// Entry point behind main(); `args` excludes argv[0]. Streams are
/// parameters so tests can run commands in-process. Exit status: 0 on
/// success, 1 when a verification check fails, 2 on usage errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    using namespace cli_detail;
    CLI::App app{"maximum-likelihood decoding of the binary Golay codes G23 and G24:\n"
                 "analytic performance curves, Monte Carlo simulation, and exhaustive\n"
                 "verification of the combinatorial facts the analysis rests on",
                 "golay"};
    app.require_subcommand(1);

    CurvesOptions curves;
    CLI::App* c = app.add_subcommand("curves", "analytic CWER/BER curves over an Eb/N0 grid");
    c->add_option("--grid", curves.grid, "Eb/N0 grid start:stop:step in dB")
        ->capture_default_str();
    c->add_option("--format", curves.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    SimulateOptions sim;
    CLI::App* s = app.add_subcommand("simulate", "Monte Carlo decoder simulation on the BSC");
    s->add_option("--decoder", sim.decoder,
                  "ml23 | ml24_random | ml24_agreement | passthrough24 | d23_on_g24")
        ->required();
    CLI::Option* sgrid =
        s->add_option("--grid", sim.grid, "Eb/N0 grid start:stop:step in dB");
    s->add_option("--p", sim.p_list, "explicit crossover probabilities")
        ->delimiter(',')
        ->excludes(sgrid);
    s->add_option("--seed", sim.seed, "RNG seed")->capture_default_str();
    s->add_option("--min-errors", sim.min_errors, "stop after this many codeword errors")
        ->capture_default_str();
    s->add_option("--max-trials", sim.max_trials, "hard cap on trials per point")
        ->capture_default_str();
    s->add_flag("--all-zero", sim.all_zero, "transmit the zero codeword instead of random data");
    s->add_option("--jobs", sim.jobs, "worker threads (result is independent of this)")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    s->add_option("--format", sim.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    VerifyOptions ver;
    CLI::App* v = app.add_subcommand("verify", "exhaustive combinatorial verification");
    v->add_option("--only", ver.only, "run a single named check");
    v->add_flag("--exhaustive", ver.exhaustive, "check all 10626 patterns in lemma_counting");
    v->add_option("--format", ver.format, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
    v->add_flag("--inject-fault", ver.inject_fault)->group("");  // test hook, hidden

    FiguresOptions fig;
    CLI::App* f = app.add_subcommand("figures", "derived scalar figures as JSON");
    f->add_option("--format", fig.format, "output format")
        ->check(CLI::IsMember({"json"}))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);  // CLI11's vector overload expects reversed arguments
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c)) return cmd_curves(curves, out);
        if (app.got_subcommand(s)) {
            if (s->count("--grid") + s->count("--p") != 1) {
                err << "golay simulate: exactly one of --grid / --p is required\n";
                return 2;
            }
            return cmd_simulate(sim, out);
        }
        if (app.got_subcommand(v)) return cmd_verify(ver, out);
        if (app.got_subcommand(f)) return cmd_figures(fig, out);
    } catch (const CLI::ValidationError& e) {
        err << "golay: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "golay: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "golay: " << e.what() << '\n';
        return 1;
    }
    return 2;  // unreachable: require_subcommand(1)
}

}  // namespace golay
