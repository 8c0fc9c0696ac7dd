#include "qcap/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <optional>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcap/kraus_io.hpp"
#include "qcap/protocols.hpp"
#include "qcap/shannon.hpp"

namespace qcap::cli {

namespace {

using nlohmann::json;

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string sci2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed_flag) {
    if (seed_given) return seed_flag;
    if (const char* env = std::getenv("QCAP_SEED")) {
        const std::string_view text(env);
        std::uint64_t v = 0;
        const auto result = std::from_chars(text.data(), text.data() + text.size(), v);
        if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
            throw std::invalid_argument("QCAP_SEED is not an unsigned integer");
        }
        return v;
    }
    return kDefaultSeed;
}

std::vector<double> parse_prob_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_probability(item));
    if (out.empty()) throw std::invalid_argument("--probs: empty list");
    return out;
}

struct BuiltChannel {
    QuantumChannel channel;
    std::string description;
};

BuiltChannel build_channel(const CapacityOptions& opt) {
    if (opt.family == "depolarizing") {
        return {depolarizing(opt.d, opt.x),
                "depolarizing(d=" + std::to_string(opt.d) + ", x=" + fixed6(opt.x) + ")"};
    }
    if (opt.family == "erasure") {
        return {erasure(opt.d, opt.x),
                "erasure(d=" + std::to_string(opt.d) + ", x=" + fixed6(opt.x) + ")"};
    }
    if (opt.family == "dephasing") {
        return {dephasing(opt.x), "dephasing(x=" + fixed6(opt.x) + ")"};
    }
    if (opt.family == "bell-diagonal") {
        return {bell_diagonal(opt.d, Distribution(opt.probs)),
                "bell-diagonal(d=" + std::to_string(opt.d) + ")"};
    }
    if (opt.family == "kraus-file") {
        return {load_kraus_file(opt.file), "kraus-file(" + opt.file + ")"};
    }
    throw std::invalid_argument("unknown channel family: " + opt.family);
}

std::vector<std::string> default_measures(const CapacityOptions& opt) {
    if (opt.family == "depolarizing") {
        std::vector<std::string> m{"c1", "ce"};
        const double threshold =
            static_cast<double>(opt.d) / static_cast<double>(opt.d + 1);
        if (opt.x >= threshold) m.push_back("fccc-mr");
        m.insert(m.end(), {"q-hash", "q-e"});
        return m;
    }
    if (opt.family == "erasure") return {"c", "q", "ce", "q-e"};
    if (opt.family == "dephasing") return {"c1", "ce", "q-hash", "q-e"};
    if (opt.family == "bell-diagonal") return {"ce", "c-sd", "fccc-tp", "q-e"};
    return {"ce", "q-e"};  // kraus-file
}

CapacityEntry simulated_entry(const std::string& name, const QuantumChannel& ch) {
    const BaResult ba = ba_capacity_full(superdense_induced(ch), 1e-9);
    return {name, ba.capacity, Method::simulated, ba.bracket};
}

}  // namespace

double parse_probability(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const double num = std::stod(text.substr(0, slash));
            const double den = std::stod(text.substr(slash + 1));
            if (den == 0.0) throw std::invalid_argument("zero denominator");
            return num / den;
        }
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse probability: '" + text + "'");
    }
}

CapacityReport make_capacity_report(const CapacityOptions& opt) {
    CapacityReport report;
    const std::vector<std::string> measures =
        opt.measures.empty() ? default_measures(opt) : opt.measures;

    // the erasure family has its own closed forms and report names
    if (opt.family == "erasure") {
        const ErasureCapacities caps = erasure_capacities(opt.d, opt.x);
        report.channel = build_channel(opt).description;
        for (const std::string& m : measures) {
            if (m == "c") {
                report.entries.push_back({"C_erasure", caps.classical, Method::closed_form, 0.0});
            } else if (m == "q") {
                report.entries.push_back({"Q_erasure", caps.quantum, Method::closed_form, 0.0});
            } else if (m == "ce") {
                report.entries.push_back({"CE_erasure", caps.assisted, Method::closed_form, 0.0});
            } else if (m == "q-e") {
                report.entries.push_back(
                    {"Q_E", qe_from_ce(caps.assisted), Method::closed_form, 0.0});
            } else if (m == "c-sd") {
                report.entries.push_back(simulated_entry("C_Sd", erasure(opt.d, opt.x)));
            } else {
                throw std::invalid_argument("measure '" + m + "' not defined for erasure");
            }
        }
        return report;
    }

    const BuiltChannel built = build_channel(opt);
    report.channel = built.description;
    const QuantumChannel& ch = built.channel;

    // C_E provider, shared by the ce and q-e rows: closed form when the
    // family has one, otherwise simulated/optimized once and cached.
    std::optional<CapacityEntry> ce_cache;
    auto ce_value = [&]() -> const CapacityEntry& {
        if (ce_cache) return *ce_cache;
        if (opt.family == "depolarizing") {
            ce_cache = {"C_E", ce_depolarizing(opt.d, opt.x), Method::closed_form, 0.0};
        } else if (opt.family == "dephasing") {
            ce_cache = {"C_E", ce_dephasing(opt.x), Method::closed_form, 0.0};
        } else if (opt.family == "bell-diagonal") {
            ce_cache = simulated_entry("C_E", ch);
        } else {
            const CeOptimum best = ce_optimize(ch, opt.tol, opt.restarts, opt.seed);
            const auto [lo, hi] =
                std::minmax_element(best.restart_values.begin(), best.restart_values.end());
            ce_cache = {"C_E", best.value, Method::optimized, *hi - *lo};
        }
        return *ce_cache;
    };

    for (const std::string& m : measures) {
        if (m == "c1") {
            if (opt.family == "depolarizing") {
                report.entries.push_back(
                    {"C1", c1_depolarizing(opt.d, opt.x), Method::closed_form, 0.0});
            } else if (opt.family == "dephasing") {
                report.entries.push_back({"C1", 1.0, Method::closed_form, 0.0});
            } else {
                throw std::invalid_argument("measure 'c1' not defined for " + opt.family);
            }
        } else if (m == "ce") {
            report.entries.push_back(ce_value());
        } else if (m == "fccc-mr") {
            if (opt.family != "depolarizing") {
                throw std::invalid_argument("measure 'fccc-mr' requires the depolarizing family");
            }
            report.entries.push_back(
                {"FCCC_MR", fccc_mr_depolarizing(opt.d, opt.x), Method::closed_form, 0.0});
        } else if (m == "fccc-tp") {
            report.entries.push_back(simulated_entry("FCCC_Tp", ch));
        } else if (m == "c-sd") {
            report.entries.push_back(simulated_entry("C_Sd", ch));
        } else if (m == "q-hash") {
            report.entries.push_back({"Q_hash", hashing_bound(ch), Method::closed_form, 0.0});
        } else if (m == "q-e") {
            const CapacityEntry& ce = ce_value();
            report.entries.push_back({"Q_E", qe_from_ce(ce.value), ce.method, ce.bracket});
        } else {
            throw std::invalid_argument("unknown measure: " + m);
        }
    }
    return report;
}

namespace {

void render_report(const CapacityReport& report, const std::string& format, std::ostream& out) {
    if (format == "json") {
        json entries = json::array();
        for (const CapacityEntry& e : report.entries) {
            entries.push_back({{"name", e.name},
                               {"value", e.value},
                               {"method", method_name(e.method)},
                               {"bracket", e.bracket}});
        }
        out << json{{"channel", report.channel}, {"entries", entries}}.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        out << "name,value,method,bracket\n";
        for (const CapacityEntry& e : report.entries) {
            out << e.name << ',' << fixed6(e.value) << ',' << method_name(e.method) << ','
                << sci2(e.bracket) << '\n';
        }
        return;
    }
    out << "channel: " << report.channel << '\n';
    for (const CapacityEntry& e : report.entries) {
        char line[128];
        std::snprintf(line, sizeof(line), "%-10s %12.6f   %-12s %s\n", e.name.c_str(), e.value,
                      method_name(e.method), e.bracket > 0.0 ? sci2(e.bracket).c_str() : "-");
        out << line;
    }
}

}  // namespace

void write_sweep_csv(const SweepOptions& opt, std::ostream& out) {
    if (opt.steps < 1) throw std::invalid_argument("sweep: steps must be at least 1");
    if (opt.steps > 1 && !(opt.x_end > opt.x_start)) {
        throw std::invalid_argument("sweep: x-end must exceed x-start");
    }
    std::vector<double> grid(opt.steps);
    for (std::size_t i = 0; i < opt.steps; ++i) {
        grid[i] = opt.steps == 1 ? opt.x_start
                                 : opt.x_start + (opt.x_end - opt.x_start) *
                                                     static_cast<double>(i) /
                                                     static_cast<double>(opt.steps - 1);
    }

    if (opt.family == "erasure") {
        out << "x,C,Q,C_E\n";
        for (double x : grid) {
            const ErasureCapacities caps = erasure_capacities(opt.d, x);
            // assisted = 2*classical exactly, so the columns stay locked
            out << fixed6(x) << ',' << fixed6(caps.classical) << ',' << fixed6(caps.quantum)
                << ',' << fixed6(2.0 * caps.classical) << '\n';
        }
        return;
    }
    if (opt.family != "depolarizing") {
        throw std::invalid_argument("sweep: family must be erasure or depolarizing");
    }
    const double threshold = static_cast<double>(opt.d) / static_cast<double>(opt.d + 1);
    out << "x,c1,ce,erasure_upper,fccc_mr,q_hash\n";
    for (double x : grid) {
        const double c1 = c1_depolarizing(opt.d, x);
        const double ce = ce_depolarizing(opt.d, x);
        const double upper = (1.0 - x) * std::log2(static_cast<double>(opt.d));
        const double qhash = ce - std::log2(static_cast<double>(opt.d));
        out << fixed6(x) << ',' << fixed6(c1) << ',' << fixed6(ce) << ',' << fixed6(upper) << ',';
        if (x >= threshold) out << fixed6(fccc_mr_depolarizing(opt.d, x));
        out << ',' << fixed6(qhash) << '\n';
    }
}

namespace {

struct VerifyCheck {
    std::string name;
    double deviation;
    double tol;
    bool pass;
};

struct VerifyOutcome {
    std::vector<VerifyCheck> checks;
    bool pass = true;

    void add(const std::string& name, double deviation, double tol) {
        const bool ok = deviation <= tol;
        checks.push_back({name, deviation, tol, ok});
        pass = pass && ok;
    }
};

struct VerifyOptions {
    std::string suite;
    std::string channel = "depolarizing";
    std::string claim = "enhancement";
    std::size_t d = 2;
    double x = 2.0 / 3.0;
    double tol = 0.0;  // 0 -> per-suite default
    std::uint64_t seed = kDefaultSeed;
};

VerifyOutcome verify_bell_diagonal_suite(const VerifyOptions& opt) {
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-6;
    VerifyOutcome out;
    const BellDiagonalReport dep = verify_bell_diagonal(depolarizing(opt.d, opt.x), tol);
    out.add("depolarizing_roundtrip_choi", dep.choi_deviation, tol);
    out.add("depolarizing_bound_gap", dep.bound_gap, tol);
    out.add("depolarizing_ce_vs_closed_form",
            std::abs(dep.ce - ce_depolarizing(opt.d, opt.x)), tol);
    const BellDiagonalReport deph = verify_bell_diagonal(dephasing(opt.x), tol);
    out.add("dephasing_roundtrip_choi", deph.choi_deviation, tol);
    out.add("dephasing_ce_vs_closed_form", std::abs(deph.ce - ce_dephasing(opt.x)), tol);
    return out;
}

VerifyOutcome verify_optimizer_suite(const VerifyOptions& opt) {
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-5;
    VerifyOutcome out;
    double target = 0.0;
    QuantumChannel ch = [&] {
        if (opt.channel == "depolarizing") {
            target = ce_depolarizing(opt.d, opt.x);
            return depolarizing(opt.d, opt.x);
        }
        if (opt.channel == "erasure") {
            target = erasure_capacities(opt.d, opt.x).assisted;
            return erasure(opt.d, opt.x);
        }
        if (opt.channel == "dephasing") {
            target = ce_dephasing(opt.x);
            return dephasing(opt.x);
        }
        throw std::invalid_argument("verify optimizer: unsupported channel " + opt.channel);
    }();
    const CeOptimum best = ce_optimize(ch, 1e-8, 8, opt.seed);
    out.add(opt.channel + "_optimized_vs_closed_form", std::abs(best.value - target), tol);
    return out;
}

VerifyOutcome verify_protocols_suite(const VerifyOptions& opt) {
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-9;
    VerifyOutcome out;
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const DiscreteChannel induced = superdense_induced(depolarizing(opt.d, x));
        const DiscreteChannel symmetric = dary_symmetric(opt.d * opt.d, x);
        double dev = 0.0;
        for (std::size_t k = 0; k < induced.matrix().size(); ++k) {
            dev = std::max(dev, std::abs(induced.matrix()[k] - symmetric.matrix()[k]));
        }
        out.add("superdense_matches_symmetric_x" + fixed6(x), dev, tol);
        const QuantumChannel rebuilt = teleport_induced(symmetric, opt.d);
        out.add("teleport_matches_depolarizing_x" + fixed6(x),
                max_abs_diff(choi(rebuilt).state().matrix(),
                             choi(depolarizing(opt.d, x)).state().matrix()),
                tol);
    }
    for (double x : {0.25, 0.5, 0.75}) {
        const double target =
            2.0 * (1.0 - x) * std::log2(static_cast<double>(opt.d));
        const double sd = c_sd(erasure(opt.d, x));
        const double tp = fccc_tp(classical_erasure(opt.d * opt.d, x));
        out.add("erasure_coincidence_x" + fixed6(x),
                std::max(std::abs(sd - target), std::abs(tp - target)), 1e-6);
    }
    const double dd = static_cast<double>(opt.d);
    out.add("measure_reprepare_threshold",
            max_abs_diff(choi(measure_reprepare(opt.d, 0.0)).state().matrix(),
                         choi(depolarizing(opt.d, dd / (dd + 1.0))).state().matrix()),
            1e-12);
    const ChoiState mc = measure_reprepare_mc(opt.d, 0.0, 100000, opt.seed);
    out.add("measure_reprepare_monte_carlo",
            max_abs_diff(mc.state().matrix(),
                         choi(measure_reprepare(opt.d, 0.0)).state().matrix()),
            0.01);
    return out;
}

VerifyOutcome verify_asymptotics_suite(const VerifyOptions& opt) {
    VerifyOutcome out;
    if (opt.claim == "enhancement") {
        const double tol = opt.tol > 0.0 ? opt.tol : 0.01;
        const double x = 1.0 - 1e-6;
        const double ratio = ce_depolarizing(opt.d, x) / c1_depolarizing(opt.d, x);
        const double target = static_cast<double>(opt.d) + 1.0;
        out.add("enhancement_ratio_d" + std::to_string(opt.d),
                std::abs(ratio - target) / target, tol);
        return out;
    }
    if (opt.claim == "bounds-gap") {
        const double tol = opt.tol > 0.0 ? opt.tol : 0.01;
        const std::size_t d = opt.d;
        for (double x : {0.3, 0.5, 0.7}) {
            const double gap =
                (1.0 - x) * std::log2(static_cast<double>(d)) - c1_depolarizing(d, x);
            out.add("bounds_gap_x" + fixed6(x), std::abs(gap - h_dary(x, 2)), tol);
        }
        return out;
    }
    throw std::invalid_argument("verify asymptotics: unknown claim " + opt.claim);
}

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    VerifyOutcome outcome;
    if (opt.suite == "bell-diagonal") {
        outcome = verify_bell_diagonal_suite(opt);
    } else if (opt.suite == "optimizer") {
        outcome = verify_optimizer_suite(opt);
    } else if (opt.suite == "protocols") {
        outcome = verify_protocols_suite(opt);
    } else if (opt.suite == "asymptotics") {
        outcome = verify_asymptotics_suite(opt);
    } else {
        throw std::invalid_argument("unknown verify suite: " + opt.suite);
    }
    json checks = json::array();
    for (const VerifyCheck& c : outcome.checks) {
        checks.push_back(
            {{"name", c.name}, {"deviation", c.deviation}, {"tol", c.tol}, {"pass", c.pass}});
    }
    out << json{{"suite", opt.suite}, {"pass", outcome.pass}, {"checks", checks}}.dump(2)
        << '\n';
    return outcome.pass ? kExitOk : kExitVerifyFailed;
}

struct OptimizeOptions {
    std::string kraus_path;
    double tol = 1e-8;
    std::size_t restarts = 8;
    std::uint64_t seed = kDefaultSeed;
};

int run_optimize(const OptimizeOptions& opt, std::ostream& out) {
    const QuantumChannel ch = load_kraus_file(opt.kraus_path);
    const CeOptimum best = ce_optimize(ch, opt.tol, opt.restarts, opt.seed);
    const auto [lo, hi] =
        std::minmax_element(best.restart_values.begin(), best.restart_values.end());

    json argmax = json::array();
    const ComplexMatrix& m = best.argmax.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        argmax.push_back(std::move(row));
    }
    out << json{{"ce", best.value},
                {"qe", qe_from_ce(std::max(best.value, 0.0))},
                {"restart_values", best.restart_values},
                {"restart_dispersion", *hi - *lo},
                {"argmax", argmax}}
               .dump(2)
        << '\n';
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"capacities of noisy quantum channels: closed forms, optimization, protocols"};
    app.require_subcommand(1);

    CapacityOptions cap;
    std::string cap_x{"0"};
    std::string cap_probs;
    std::string cap_format{"table"};
    std::string cap_emit;
    auto* cmd_cap = app.add_subcommand("capacity", "compute capacities of one channel");
    cmd_cap->add_option("--channel", cap.family,
                        "depolarizing|erasure|dephasing|bell-diagonal|kraus-file")
        ->required();
    cmd_cap->add_option("--d", cap.d, "input dimension");
    cmd_cap->add_option("--x", cap_x, "noise parameter, decimal or fraction");
    cmd_cap->add_option("--probs", cap_probs, "bell-diagonal weights, index a*d+b");
    cmd_cap->add_option("--file", cap.file, "kraus json path");
    std::string cap_measures;
    cmd_cap->add_option("--measures", cap_measures, "comma list, e.g. c1,ce,fccc-mr");
    cmd_cap->add_option("--format", cap_format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd_cap->add_option("--tol", cap.tol, "optimizer objective tolerance (bits)");
    cmd_cap->add_option("--restarts", cap.restarts, "optimizer restarts");
    cmd_cap->add_option("--seed", cap.seed, "master seed");
    cmd_cap->add_option("--emit-kraus", cap_emit, "write the channel's kraus json here");

    SweepOptions sweep;
    std::string sweep_x0{"0"}, sweep_x1{"1"}, sweep_out;
    auto* cmd_sweep = app.add_subcommand("sweep", "write a capacity-vs-x CSV");
    cmd_sweep->add_option("--channel", sweep.family, "depolarizing|erasure")->required();
    cmd_sweep->add_option("--d", sweep.d, "input dimension");
    cmd_sweep->add_option("--x-start", sweep_x0, "grid start");
    cmd_sweep->add_option("--x-end", sweep_x1, "grid end");
    cmd_sweep->add_option("--steps", sweep.steps, "number of rows");
    cmd_sweep->add_option("--out", sweep_out, "output CSV path")->required();

    VerifyOptions verify;
    std::string verify_x{"2/3"};
    auto* cmd_verify = app.add_subcommand("verify", "run an invariant suite");
    cmd_verify
        ->add_option("--suite", verify.suite, "bell-diagonal|optimizer|protocols|asymptotics")
        ->required();
    cmd_verify->add_option("--channel", verify.channel, "optimizer suite channel family");
    cmd_verify->add_option("--claim", verify.claim, "asymptotics claim: enhancement|bounds-gap");
    cmd_verify->add_option("--d", verify.d, "dimension");
    cmd_verify->add_option("--x", verify_x, "noise parameter");
    cmd_verify->add_option("--tol", verify.tol, "override the suite tolerance");
    cmd_verify->add_option("--seed", verify.seed, "master seed");

    OptimizeOptions optimize;
    auto* cmd_optimize = app.add_subcommand("optimize", "maximize the mutual-information form");
    cmd_optimize->add_option("--kraus", optimize.kraus_path, "kraus json path")->required();
    cmd_optimize->add_option("--tol", optimize.tol, "objective tolerance (bits)");
    cmd_optimize->add_option("--restarts", optimize.restarts, "restart count");
    cmd_optimize->add_option("--seed", optimize.seed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << e.what() << '\n';
        return kExitArgument;
    }

    try {
        if (cmd_cap->parsed()) {
            cap.x = parse_probability(cap_x);
            if (!cap_probs.empty()) cap.probs = parse_prob_list(cap_probs);
            if (!cap_measures.empty()) {
                std::stringstream ss(cap_measures);
                std::string item;
                while (std::getline(ss, item, ',')) cap.measures.push_back(item);
            }
            cap.seed = resolve_seed(cmd_cap->count("--seed") > 0, cap.seed);
            if (cap.family == "kraus-file" && cap.file.empty()) {
                throw std::invalid_argument("kraus-file channel needs --file");
            }
            if (cap.family == "bell-diagonal" && cap.probs.empty()) {
                throw std::invalid_argument("bell-diagonal channel needs --probs");
            }
            const CapacityReport report = make_capacity_report(cap);
            if (!cap_emit.empty()) save_kraus_file(build_channel(cap).channel, cap_emit);
            render_report(report, cap_format, std::cout);
            return kExitOk;
        }
        if (cmd_sweep->parsed()) {
            sweep.x_start = parse_probability(sweep_x0);
            sweep.x_end = parse_probability(sweep_x1);
            std::ofstream out(sweep_out, std::ios::binary);
            if (!out) throw IoError("cannot open output path: " + sweep_out);
            write_sweep_csv(sweep, out);
            out.flush();
            if (!out) throw IoError("failed writing sweep CSV: " + sweep_out);
            return kExitOk;
        }
        if (cmd_verify->parsed()) {
            verify.x = parse_probability(verify_x);
            verify.seed = resolve_seed(cmd_verify->count("--seed") > 0, verify.seed);
            if (verify.suite == "asymptotics" && verify.claim == "bounds-gap" &&
                cmd_verify->count("--d") == 0) {
                verify.d = 1024;  // the claim is a large-d limit
            }
            return run_verify(verify, std::cout);
        }
        if (cmd_optimize->parsed()) {
            optimize.seed = resolve_seed(cmd_optimize->count("--seed") > 0, optimize.seed);
            return run_optimize(optimize, std::cout);
        }
        return kExitArgument;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgument;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace qcap::cli
