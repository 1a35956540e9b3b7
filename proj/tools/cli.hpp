#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "goldenbeta/goldenbeta.hpp"
#include "goldenbeta/io.hpp"

namespace goldenbeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kPrecisionEnv = "GOLDENBETA_PRECISION";

/// Settings shared by every subcommand; echoed into each output header.
struct RunConfig {
    std::string subcommand;
    int precision = 64;
    int enumeration_cap = kDefaultEnumerationCap;
    int max_degree = kDefaultMaxDegree;
    std::uint64_t seed = 0;
    std::string format = "auto";
    std::string out_path;
    unsigned jobs = 1;

    bool json() const { return format == "json"; }

    std::string header() const {
        std::ostringstream os;
        os << "# goldenbeta " << subcommand << " precision=" << precision << " cap=" << enumeration_cap
           << " dmax=" << max_degree << " seed=" << seed << " format=" << format << " jobs=" << jobs;
        return os.str();
    }

    nlohmann::json to_json() const {
        return {{"subcommand", subcommand}, {"precision", precision}, {"cap", enumeration_cap}, {"dmax", max_degree},
                {"seed", seed},             {"format", format},       {"jobs", jobs}};
    }
};

inline int default_precision() {
    if (const char* env = std::getenv(kPrecisionEnv)) {
        try {
            int bits = std::stoi(env);
            if (bits >= 2) return bits;
        } catch (const std::exception&) {
        }
    }
    return 64;
}

/// Significant decimal digits matching a binary precision.
inline int decimal_digits(int bits) { return static_cast<int>(std::ceil(bits * 0.30102999566398120)) + 1; }

inline std::string float_text(const GoldenScalar& v, const RunConfig& cfg) {
    return to_float(v, cfg.precision).to_string(decimal_digits(cfg.precision));
}

inline std::string double_text(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

/// Built-in densities: uniform, fbeta, linear (2x), quadratic (3x^2).
inline PiecewisePoly density_literal(const std::string& name) {
    if (name == "uniform") return uniform_density();
    if (name == "fbeta") return f_beta();
    if (name == "linear") return linear_density();
    if (name == "quadratic") return quadratic_density();
    throw ValidationError("unknown density '" + name + "' (expected uniform, fbeta, linear, quadratic)");
}

inline PiecewisePoly load_density(const std::string& literal, const std::string& file) {
    if (file.empty()) return density_literal(literal);
    std::ifstream in(file);
    if (!in) throw ValidationError("cannot open density file '" + file + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed density JSON: ") + e.what());
    }
    return j.get<PiecewisePoly>();
}

/// sum_k k |c_k| over the worst piece: an upper bound on sup |f'| over [0,1].
inline GoldenScalar derivative_bound(const PiecewisePoly& f) {
    GoldenScalar best;
    for (const auto& p : f.pieces()) {
        GoldenScalar s;
        for (int k = 1; k <= p.degree(); ++k) s += abs(p.coefficient(k)) * Rational(k);
        best = max(best, s);
    }
    return best;
}

/// Parses "p" or "p,q" (meaning p + q*beta) with rational components.
inline GoldenScalar parse_scalar(const std::string& text) {
    if (auto comma = text.find(','); comma != std::string::npos)
        return GoldenScalar(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
    return GoldenScalar(parse_rational(text), Rational(0));
}

// ---- subcommands --------------------------------------------------------------

struct ExpandOptions {
    std::string x;
    int digits = 20;
    bool use_float = false;
};

inline int cmd_expand(const RunConfig& cfg, const ExpandOptions& opt, std::ostream& out) {
    if (opt.digits < 1) throw DomainError("--digits must be >= 1");
    if (opt.use_float) {
        const double x = std::stod(opt.x);
        const Word w = digits_float(x, opt.digits);
        const double rem = iterate_float(x, opt.digits);
        if (cfg.json()) {
            out << nlohmann::json{{"config", cfg.to_json()}, {"x", x}, {"digits", w.to_string()}, {"remainder_float", rem}}.dump(2)
                << "\n";
        } else {
            out << cfg.header() << "\n" << "x,digits,remainder_float\n";
            out << double_text(x) << "," << w.to_string() << "," << double_text(rem) << "\n";
        }
        return kExitOk;
    }
    const GoldenScalar x(parse_rational(opt.x), Rational(0));
    DigitStream stream(x);
    stream.extend_to(static_cast<std::size_t>(opt.digits));
    if (cfg.json()) {
        out << nlohmann::json{{"config", cfg.to_json()},
                              {"x", x},
                              {"digits", stream.to_string()},
                              {"remainder", stream.remainder()},
                              {"remainder_float", float_text(stream.remainder(), cfg)}}
                   .dump(2)
            << "\n";
    } else {
        out << cfg.header() << "\n" << "x,digits,remainder_p,remainder_q,remainder_float\n";
        out << rational_to_string(x.p()) << "," << stream.to_string() << "," << rational_to_string(stream.remainder().p())
            << "," << rational_to_string(stream.remainder().q()) << "," << float_text(stream.remainder(), cfg) << "\n";
    }
    return kExitOk;
}

struct WordsOptions {
    int n = 1;
    bool counts_only = false;
};

inline int cmd_words(const RunConfig& cfg, const WordsOptions& opt, std::ostream& out) {
    if (opt.counts_only) {
        const CountTriple c = counts(static_cast<unsigned>(std::max(opt.n, 0)));
        if (cfg.json()) {
            out << nlohmann::json{{"config", cfg.to_json()},
                                  {"n", opt.n},
                                  {"n0", c.n0.str()},
                                  {"n1", c.n1.str()},
                                  {"total", c.total.str()}}
                       .dump(2)
                << "\n";
        } else {
            out << cfg.header() << "\n" << "n0,n1,total\n" << c.n0 << "," << c.n1 << "," << c.total << "\n";
        }
        return kExitOk;
    }
    const auto words = enumerate(opt.n, cfg.enumeration_cap);
    if (cfg.json()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& w : words) rows.push_back({{"word", w.to_string()}, {"rank", rank(w)}, {"last_digit", w.last()}});
        out << nlohmann::json{{"config", cfg.to_json()}, {"n", opt.n}, {"words", rows}}.dump(2) << "\n";
    } else {
        out << cfg.header() << "\n" << "word,rank,last_digit\n";
        for (const auto& w : words) out << w.to_string() << "," << rank(w) << "," << w.last() << "\n";
    }
    return kExitOk;
}

inline int cmd_partition(const RunConfig& cfg, int n, std::ostream& out) {
    const auto intervals = build_partition(n, cfg.enumeration_cap);
    if (cfg.json()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& iv : intervals)
            rows.push_back({{"word", iv.word.to_string()},
                            {"left", iv.left},
                            {"left_float", float_text(iv.left, cfg)},
                            {"length_exponent", iv.length_exponent()}});
        out << nlohmann::json{{"config", cfg.to_json()}, {"n", n}, {"intervals", rows}}.dump(2) << "\n";
    } else {
        out << cfg.header() << "\n" << "word,left_p,left_q,left_float,length_exponent\n";
        for (const auto& iv : intervals)
            out << iv.word.to_string() << "," << rational_to_string(iv.left.p()) << "," << rational_to_string(iv.left.q())
                << "," << float_text(iv.left, cfg) << "," << iv.length_exponent() << "\n";
    }
    return kExitOk;
}

struct DensityOptions {
    std::string f = "uniform";
    std::string density_file;
    std::string g = "fbeta";
    int n = 1;
    int n_max = 30;
    std::string method = "operator";
    int grid = 100;
    std::string lip;
    std::uint64_t samples = 100000;
};

inline PiecewisePoly pushforward_by(const RunConfig& cfg, const PiecewisePoly& f, int n, const std::string& method) {
    if (method == "direct") return pushforward_direct(f, n, std::min(cfg.enumeration_cap, kDefaultDirectCap));
    if (method == "operator") return transfer_power(f, n, cfg.max_degree);
    throw ValidationError("--method must be 'direct' or 'operator'");
}

inline int cmd_pushforward(const RunConfig& cfg, const DensityOptions& opt, std::ostream& out) {
    if (opt.n < 1) throw DomainError("--n must be >= 1");
    if (opt.grid < 1) throw DomainError("--grid must be >= 1");
    const PiecewisePoly f = load_density(opt.f, opt.density_file);
    f.require_max_degree(cfg.max_degree);
    const PiecewisePoly fn = pushforward_by(cfg, f, opt.n, opt.method);
    std::vector<std::pair<std::string, std::string>> table;
    for (int i = 0; i < opt.grid; ++i) {
        const GoldenScalar x(Rational(i, opt.grid), Rational(0));
        table.emplace_back(float_text(x, cfg), float_text(fn(x), cfg));
    }
    if (cfg.json()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [x, y] : table) rows.push_back({{"x", x}, {"f_n", y}});
        out << nlohmann::json{{"config", cfg.to_json()}, {"n", opt.n}, {"method", opt.method}, {"density", fn}, {"table", rows}}
                   .dump(2)
            << "\n";
    } else {
        out << cfg.header() << "\n";
        out << "# n=" << opt.n << " method=" << opt.method << "\n";
        out << "# density " << nlohmann::json(fn).dump() << "\n";
        out << "x,f_n\n";
        for (const auto& [x, y] : table) out << x << "," << y << "\n";
    }
    return kExitOk;
}

inline int cmd_tvdist(const RunConfig& cfg, const DensityOptions& opt, std::ostream& out) {
    if (opt.n < 0) throw DomainError("--n must be >= 0");
    const PiecewisePoly f = load_density(opt.f, opt.density_file);
    const PiecewisePoly g = density_literal(opt.g);
    const PiecewisePoly fn = transfer_power(f, opt.n, cfg.max_degree);
    const Distance d = tv_distance(fn, g);
    if (cfg.json()) {
        nlohmann::json j = to_json_value(d);
        out << nlohmann::json{{"config", cfg.to_json()}, {"n", opt.n}, {"d_tv", j}, {"float", float_text(d.value, cfg)}}.dump(2)
            << "\n";
    } else {
        out << cfg.header() << "\n" << "n,d_tv_p,d_tv_q,d_tv_float,exact,error_float\n";
        out << opt.n << "," << rational_to_string(d.value.p()) << "," << rational_to_string(d.value.q()) << ","
            << float_text(d.value, cfg) << "," << (d.exact() ? "true" : "false") << "," << float_text(d.error, cfg) << "\n";
    }
    return kExitOk;
}

inline int cmd_converge(const RunConfig& cfg, const DensityOptions& opt, std::ostream& out) {
    const PiecewisePoly f = load_density(opt.f, opt.density_file);
    const double lip = opt.lip.empty() ? to_double(derivative_bound(f)) : to_double(parse_scalar(opt.lip));
    const ConvergenceReport report = convergence_study(f, opt.n_max, lip, cfg.max_degree);
    if (cfg.json()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : report.rows)
            rows.push_back({{"n", r.n}, {"d_tv", to_json_value(r.tv)}, {"bound", r.bound}, {"pass", r.within_bound}});
        out << nlohmann::json{{"config", cfg.to_json()},
                              {"rows", rows},
                              {"fitted_rate", report.fitted_rate},
                              {"bound_rate", report.bound_rate},
                              {"calibration", report.calibration},
                              {"lip_bound", report.lip_bound},
                              {"pass", report.pass()}}
                   .dump(2)
            << "\n";
    } else {
        out << cfg.header() << "\n" << "n,d_tv,bound,pass\n";
        for (const auto& r : report.rows)
            out << r.n << "," << float_text(r.tv.value, cfg) << "," << double_text(r.bound) << ","
                << (r.within_bound ? "true" : "false") << "\n";
        out << "# fitted_rate=" << double_text(report.fitted_rate) << " bound_rate=" << double_text(report.bound_rate)
            << " calibration=" << double_text(report.calibration) << " lip_bound=" << double_text(report.lip_bound)
            << " pass=" << (report.pass() ? "true" : "false") << "\n";
    }
    return report.pass() ? kExitOk : kExitDomain;
}

struct InvarianceOptions {
    std::string spec_file;
    int m = 0;
    std::vector<std::string> params;
    bool random = false;
    std::string perturb;
};

inline int cmd_invariance(const RunConfig& cfg, const InvarianceOptions& opt, std::ostream& out) {
    InvarianceSpec spec;
    if (!opt.spec_file.empty()) {
        std::ifstream in(opt.spec_file);
        if (!in) throw ValidationError("cannot open spec file '" + opt.spec_file + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(std::string("malformed spec JSON: ") + e.what());
        }
        spec = j.get<InvarianceSpec>();
    } else {
        if (opt.m < 1) throw ValidationError("give --spec or --m >= 1");
        std::vector<GoldenScalar> params;
        if (opt.random) {
            params = random_family_params(opt.m, cfg.seed);
        } else {
            for (const auto& p : opt.params) params.push_back(parse_scalar(p));
        }
        spec = solved_family(opt.m, params);
    }
    if (!opt.perturb.empty()) spec.constants.begin()->second += parse_scalar(opt.perturb);

    const InvarianceReport report = invariance_check(spec);
    if (cfg.json()) {
        out << nlohmann::json{{"config", cfg.to_json()},
                              {"spec", spec},
                              {"residual_total", report.residual_total},
                              {"residual_zero", report.residual_zero},
                              {"pushforward_matches", report.pushforward_matches},
                              {"invariant_after_step", report.invariant_after_step},
                              {"pass", report.pass()}}
                   .dump(2)
            << "\n";
    } else {
        out << cfg.header() << "\n" << "word,constant_p,constant_q,constant_float\n";
        for (const auto& [w, c] : spec.constants)
            out << w.to_string() << "," << rational_to_string(c.p()) << "," << rational_to_string(c.q()) << ","
                << float_text(c, cfg) << "\n";
        out << "# residual_total=" << nlohmann::json(report.residual_total).dump()
            << " residual_zero=" << nlohmann::json(report.residual_zero).dump()
            << " pushforward_matches=" << (report.pushforward_matches ? "true" : "false")
            << " invariant_after_step=" << (report.invariant_after_step ? "true" : "false")
            << " pass=" << (report.pass() ? "true" : "false") << "\n";
    }
    return report.pass() ? kExitOk : kExitDomain;
}

inline int cmd_sample(const RunConfig& cfg, const DensityOptions& opt, std::ostream& out) {
    const PiecewisePoly f = load_density(opt.f, opt.density_file);
    const MonteCarloReport report = monte_carlo(f, opt.n, opt.samples, cfg.seed, cfg.jobs);
    if (cfg.format == "csv") {
        out << cfg.header() << "\n" << "n,samples,seed,ks_statistic,threshold,pass\n";
        out << report.n << "," << report.samples << "," << report.seed << "," << double_text(report.ks_statistic) << ","
            << double_text(report.threshold) << "," << (report.pass() ? "true" : "false") << "\n";
    } else {
        nlohmann::json j = report;
        j["config"] = cfg.to_json();
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

/// Exact invariants at small sizes; one line per check.
inline int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
    struct Check {
        std::string name;
        std::function<bool()> run;
    };
    const std::vector<Check> checks = {
        {"field_relation", [] { return GoldenScalar::beta() * GoldenScalar::beta() == GoldenScalar(1, 1) &&
                                       GoldenScalar::sqrt5() * GoldenScalar::sqrt5() == GoldenScalar(5); }},
        {"fibonacci_counts",
         [] {
             for (int n = 1; n <= 12; ++n) {
                 const auto words = enumerate(n);
                 Integer ones = 0;
                 for (const auto& w : words) ones += w.last();
                 const CountTriple c = counts(static_cast<unsigned>(n));
                 if (c.total != Integer(words.size()) || c.n1 != ones || c.n1 != fibonacci(static_cast<unsigned>(n)))
                     return false;
             }
             return true;
         }},
        {"binet_form",
         [] {
             for (unsigned n = 0; n <= 40; ++n)
                 if (fibonacci(n) != fibonacci_binet(n)) return false;
             return true;
         }},
        {"endpoint_identities",
         [] {
             for (int n = 1; n <= 10; ++n)
                 if (!verify_endpoint_identities(n).ok()) return false;
             return true;
         }},
        {"partition_tiles_unit_interval",
         [] {
             for (int n = 1; n <= 10; ++n) {
                 const auto parts = build_partition(n);
                 if (!parts.front().left.is_zero() || parts.back().right() != GoldenScalar::one()) return false;
                 for (std::size_t i = 0; i + 1 < parts.size(); ++i)
                     if (parts[i].right() != parts[i + 1].left) return false;
             }
             return true;
         }},
        {"expansion_of_one_half", [] { return digits(GoldenScalar(Rational(1, 2)), 30).to_string() == "010010010010010010010010010010"; }},
        {"f_beta_invariant", [] { return transfer_step(f_beta()) == f_beta(); }},
        {"operator_matches_direct",
         [&] {
             for (const auto& f : {uniform_density(), linear_density(), f_beta()})
                 for (int n = 1; n <= 6; ++n)
                     if (transfer_power(f, n, cfg.max_degree) != pushforward_direct(f, n)) return false;
             return true;
         }},
        {"uniform_closed_form",
         [] {
             PiecewisePoly fn = uniform_density();
             for (int n = 1; n <= 8; ++n) {
                 fn = transfer_step(fn);
                 if (tv_distance(fn, f_beta()).value != pow_beta(-2 * n - 3) * GoldenScalar::sqrt5().inverse()) return false;
             }
             return true;
         }},
        {"invariance_family",
         [&] {
             for (int m = 1; m <= 4; ++m)
                 if (!invariance_check(solved_family(m, random_family_params(m, cfg.seed))).pass()) return false;
             return true;
         }},
    };

    bool all = true;
    nlohmann::json rows = nlohmann::json::array();
    if (!cfg.json()) out << cfg.header() << "\n" << "check,result\n";
    for (const auto& c : checks) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception&) {
            ok = false;
        }
        all = all && ok;
        if (cfg.json())
            rows.push_back({{"check", c.name}, {"pass", ok}});
        else
            out << c.name << "," << (ok ? "PASS" : "FAIL") << "\n";
    }
    if (cfg.json()) out << nlohmann::json{{"config", cfg.to_json()}, {"checks", rows}, {"pass", all}}.dump(2) << "\n";
    return all ? kExitOk : kExitDomain;
}

// ---- entry point --------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact golden-ratio beta-expansion toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    cfg.precision = default_precision();
    app.add_option("--precision", cfg.precision, "Float output precision in bits (env GOLDENBETA_PRECISION)")
        ->check(CLI::Range(2, 1 << 20));
    app.add_option("--cap", cfg.enumeration_cap, "Enumeration cap for Omega_n")->check(CLI::Range(1, kMaxWordLength));
    app.add_option("--dmax", cfg.max_degree, "Maximum polynomial degree per piece")->check(CLI::Range(0, 16));
    app.add_option("--seed", cfg.seed, "Seed for all randomness");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"auto", "csv", "json"}));
    app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

    ExpandOptions expand_opt;
    auto* expand = app.add_subcommand("expand", "Greedy beta-expansion digits and remainder");
    expand->add_option("--x", expand_opt.x, "Point in [0,1) as a/b or decimal")->required();
    expand->add_option("--digits", expand_opt.digits, "Number of digits");
    expand->add_flag("--float", expand_opt.use_float, "Use the floating-point path");
    expand->add_flag("--exact", [&](std::int64_t) { expand_opt.use_float = false; }, "Use exact arithmetic (default)");

    WordsOptions words_opt;
    auto* words = app.add_subcommand("words", "Enumerate or count admissible words");
    words->add_option("--n", words_opt.n, "Word length")->required();
    words->add_flag("--counts", words_opt.counts_only, "Print N0, N1, N only");

    int partition_n = 1;
    auto* partition = app.add_subcommand("partition", "Intervals I_{n,J} of the level-n partition");
    partition->add_option("--n", partition_n, "Level")->required();

    DensityOptions dens;
    auto add_density = [&](CLI::App* sub) {
        sub->add_option("--f", dens.f, "Built-in density: uniform, fbeta, linear, quadratic");
        sub->add_option("--density-file", dens.density_file, "PiecewisePoly JSON file");
    };
    auto* pushforward = app.add_subcommand("pushforward", "Density of T^n(X)");
    add_density(pushforward);
    pushforward->add_option("--n", dens.n, "Iterations")->required();
    pushforward->add_option("--method", dens.method, "direct or operator");
    pushforward->add_option("--grid", dens.grid, "Number of sample points in the table");

    auto* tvdist = app.add_subcommand("tvdist", "Total variation distance of f_n to a reference density");
    add_density(tvdist);
    tvdist->add_option("--n", dens.n, "Iterations");
    tvdist->add_option("--g", dens.g, "Reference built-in density");

    auto* converge = app.add_subcommand("converge", "Convergence study of d_TV(P_n, P_beta)");
    add_density(converge);
    converge->add_option("--n-max", dens.n_max, "Largest n");
    converge->add_option("--lip", dens.lip, "Bound on sup|f'| (default: computed from coefficients)");

    InvarianceOptions inv;
    auto* invariance = app.add_subcommand("invariance", "Exact invariance check of a piecewise-constant density");
    invariance->add_option("--spec", inv.spec_file, "InvarianceSpec JSON file");
    invariance->add_option("--m", inv.m, "Level of the solved family");
    invariance->add_option("--param", inv.params, "Free parameter p or p,q (= p + q beta); repeatable");
    invariance->add_flag("--random", inv.random, "Random nonnegative member of the family (uses --seed)");
    invariance->add_option("--perturb", inv.perturb, "Add this value to the first constant");

    auto* sample = app.add_subcommand("sample", "Monte Carlo KS check of F_n");
    add_density(sample);
    sample->add_option("--n", dens.n, "Iterations")->required();
    sample->add_option("--samples", dens.samples, "Sample count");

    auto* selftest = app.add_subcommand("selftest", "Run the exact invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.subcommand = chosen->get_name();
    if (cfg.format == "auto") cfg.format = chosen == sample ? "json" : "csv";

    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            err << "error: cannot open output file '" << cfg.out_path << "'\n";
            return kExitDomain;
        }
    }
    std::ostream& sink = cfg.out_path.empty() ? out : file;

    try {
        if (chosen == expand) return cmd_expand(cfg, expand_opt, sink);
        if (chosen == words) return cmd_words(cfg, words_opt, sink);
        if (chosen == partition) return cmd_partition(cfg, partition_n, sink);
        if (chosen == pushforward) return cmd_pushforward(cfg, dens, sink);
        if (chosen == tvdist) return cmd_tvdist(cfg, dens, sink);
        if (chosen == converge) return cmd_converge(cfg, dens, sink);
        if (chosen == invariance) return cmd_invariance(cfg, inv, sink);
        if (chosen == sample) return cmd_sample(cfg, dens, sink);
        if (chosen == selftest) return cmd_selftest(cfg, sink);
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

} // namespace goldenbeta::cli
