// Acceptance suite: one PASS/FAIL line per criterion, with its time limit enforced.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "goldenbeta/goldenbeta.hpp"
#include "oracles.hpp"

using namespace goldenbeta;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit;  // seconds
    std::function<Outcome()> run;
};

GoldenScalar inv_sqrt5() { return GoldenScalar::sqrt5().inverse(); }

Outcome fibonacci_counts() {
    for (int n = 1; n <= 20; ++n) {
        Integer zeros = 0, ones = 0;
        for (const auto& s : oracle::brute_force_words(n)) (s.back() == '1' ? ones : zeros) += 1;
        const unsigned un = static_cast<unsigned>(n);
        if (zeros != fibonacci(un + 1) || ones != fibonacci(un) || zeros + ones != fibonacci(un + 2))
            return {false, "brute-force counts differ at n=" + std::to_string(n)};
        const CountTriple c = counts(un);
        if (c.n0 != zeros || c.n1 != ones || c.total != zeros + ones)
            return {false, "counts() differs at n=" + std::to_string(n)};
        if (enumerate(n).size() != (zeros + ones).convert_to<std::size_t>())
            return {false, "enumerate size differs at n=" + std::to_string(n)};
    }
    return {true, "n=1..20"};
}

Outcome endpoint_identities() {
    std::uint64_t words = 0;
    for (int n = 1; n <= 15; ++n) {
        const EndpointIdentityReport r = verify_endpoint_identities(n);
        if (!r.ok()) return {false, "identity fails at n=" + std::to_string(n)};
        words += r.words_checked;
    }
    return {true, std::to_string(words) + " words checked, n=1..15"};
}

Outcome partition_integrity() {
    for (int n = 1; n <= 15; ++n) {
        const auto p = build_partition(n);
        if (!p.front().left.is_zero() || p.back().right() != GoldenScalar::one())
            return {false, "ends wrong at n=" + std::to_string(n)};
        GoldenScalar total;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i > 0 && p[i - 1].right() != p[i].left) return {false, "gap or overlap at n=" + std::to_string(n)};
            total += p[i].length;
        }
        if (total != GoldenScalar::one()) return {false, "total length != 1 at n=" + std::to_string(n)};
    }
    return {true, "n=1..15"};
}

Outcome f_beta_invariance() {
    return {transfer_step(f_beta()) == f_beta(), "transfer_step(f_beta) coefficients compared exactly"};
}

Outcome operator_direct() {
    std::vector<std::pair<std::string, PiecewisePoly>> densities{
        {"uniform", uniform_density()}, {"2x", linear_density()}, {"f_beta", f_beta()}};
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
        densities.emplace_back("random" + std::to_string(seed), random_piecewise_linear(seed));
    for (const auto& [name, f] : densities) {
        PiecewisePoly fn = f;
        for (int n = 1; n <= 12; ++n) {
            fn = transfer_step(fn);
            if (fn != pushforward_direct(f, n)) return {false, name + " differs at n=" + std::to_string(n)};
        }
    }
    return {true, "6 densities, n=1..12"};
}

Outcome contraction() {
    for (std::uint64_t pair = 0; pair < 20; ++pair) {
        const PiecewisePoly f = random_piecewise_linear(1000 + 2 * pair);
        const PiecewisePoly g = random_piecewise_linear(1001 + 2 * pair);
        const Distance start = l1_distance(f, g);
        if (!start.exact()) return {false, "initial distance not exact"};
        PiecewisePoly fn = f, gn = g;
        for (int n = 1; n <= 10; ++n) {
            fn = transfer_step(fn);
            gn = transfer_step(gn);
            const Distance d = l1_distance(fn, gn);
            if (!d.exact() || d.value > start.value)
                return {false, "pair " + std::to_string(pair) + " expands at n=" + std::to_string(n)};
        }
    }
    return {true, "20 pairs, n=1..10"};
}

Outcome uniform_decay() {
    const long double split = 1 / oracle::kPhi;
    double worst = 0;
    for (int n = 1; n <= 4; ++n) {
        auto integrand = [n](long double x) {
            return std::fabs(oracle::pushforward_value([](long double) { return 1.0L; }, n, x) - oracle::f_beta(x));
        };
        const long double tv =
            (oracle::gauss_legendre(integrand, 0, split, 16) + oracle::gauss_legendre(integrand, split, 1, 16)) / 2;
        const long double closed = std::pow(oracle::kPhi, -(2.0L * n + 3)) / std::sqrt(5.0L);
        worst = std::max(worst, static_cast<double>(std::fabs(tv - closed)));
        if (std::fabs(tv - closed) > 1e-12L) return {false, "quadrature disagrees at n=" + std::to_string(n)};
    }
    PiecewisePoly fn = uniform_density();
    for (int n = 1; n <= 15; ++n) {
        fn = transfer_step(fn);
        const Distance d = tv_distance(fn, f_beta());
        if (!d.exact() || d.value != pow_beta(-2 * n - 3) * inv_sqrt5())
            return {false, "closed form fails at n=" + std::to_string(n)};
    }
    std::ostringstream os;
    os << "quadrature max deviation " << worst << " (n=1..4), exact n=1..15";
    return {true, os.str()};
}

Outcome convergence_rate() {
    std::ostringstream os;
    bool ok = true;
    const std::vector<std::tuple<std::string, PiecewisePoly, double>> starts{{"2x", linear_density(), 2.0},
                                                                             {"3x^2", quadratic_density(), 6.0}};
    for (const auto& [name, f, lip] : starts) {
        const ConvergenceReport r = convergence_study(f, 30, lip);
        ok = ok && r.pass();
        os << name << ": fitted=" << r.fitted_rate << " bound=" << r.bound_rate << " C=" << r.calibration
           << " rows_ok=" << (r.bound_ok() ? "yes" : "no") << "; ";
    }
    return {ok, os.str()};
}

Outcome invariance_family() {
    int members = 0;
    for (int m = 1; m <= 5; ++m)
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            if (!invariance_check(solved_family(m, random_family_params(m, seed))).pass())
                return {false, "member m=" + std::to_string(m) + " seed=" + std::to_string(seed) + " not invariant"};
            ++members;
        }
    for (int m = 1; m <= 5; ++m) {
        InvarianceSpec spec = solved_family(m, random_family_params(m, 1));
        spec.constants.begin()->second += GoldenScalar(Rational(1, 1000000));
        const InvarianceReport r = invariance_check(spec);
        if (r.pass() || r.residual_total.is_zero())
            return {false, "perturbation not detected at m=" + std::to_string(m)};
    }
    return {true, std::to_string(members) + " members invariant; perturbations rejected with nonzero residual"};
}

Outcome monte_carlo_runs(double per_run_limit) {
    std::ostringstream os;
    bool ok = true;
    const std::vector<std::pair<std::string, PiecewisePoly>> starts{{"uniform", uniform_density()},
                                                                    {"2x", linear_density()}};
    for (const auto& [name, f] : starts)
        for (int n : {5, 10, 15}) {
            const auto t0 = std::chrono::steady_clock::now();
            const ReferenceGrid grid = make_reference_grid(f, n);
            const double grid_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            for (std::uint64_t seed : {1, 2, 3}) {
                const auto t1 = std::chrono::steady_clock::now();
                const MonteCarloReport r = monte_carlo(f, n, 100000, seed, grid);
                const double seconds =
                    grid_seconds + std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
                const bool run_ok = r.pass() && seconds < per_run_limit;
                ok = ok && run_ok;
                os << "\n    " << (run_ok ? "ok  " : "FAIL") << " " << name << " n=" << n << " seed=" << seed
                   << " KS=" << r.ks_statistic << " threshold=" << r.threshold << " time=" << seconds << "s";
            }
        }
    return {ok, os.str()};
}

Outcome expansion_oracle() {
    std::string expected;
    for (int i = 0; i < 10; ++i) expected += "010";
    if (digits(GoldenScalar(Rational(1, 2)), 30).to_string() != expected) return {false, "digits(1/2, 30) wrong"};
    SeededRng rng(11);
    const GoldenScalar shrink = pow_beta(-25);
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t den = rng.uniform_int(1, 1000000000);
        const GoldenScalar x(Rational(rng.uniform_int(0, den - 1), den));
        if (decode(digits(x, 25)) + shrink * iterate(x, 25) != x) return {false, "telescoping fails for " + x.to_string()};
    }
    return {true, "period-3 stream confirmed; 1000 telescoping identities at n=25"};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Fibonacci counts by brute force", 5, fibonacci_counts},
        {2, "successor and maximal-word endpoint identities", 10, endpoint_identities},
        {3, "partition tiles [0,1) exactly", 10, partition_integrity},
        {4, "f_beta is a fixed point of the transfer operator", 1, f_beta_invariance},
        {5, "operator path equals direct pushforward", 60, operator_direct},
        {6, "L1 contraction of pushforwards", 60, contraction},
        {7, "uniform-start decay closed form", 30, uniform_decay},
        {8, "convergence rate against calibrated bound", 120, convergence_rate},
        {9, "invariance constraint family", 60, invariance_family},
        {10, "Monte Carlo KS cross-check of the pushforward CDF", 6 * 3 * 60, [] { return monte_carlo_runs(60); }},
        {11, "expansion oracle and telescoping identity", 30, expansion_oracle},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (seconds >= c.time_limit) {
            outcome.ok = false;
            outcome.detail += " [time limit " + std::to_string(c.time_limit) + "s exceeded]";
        }
        if (!outcome.ok) ++failures;
        std::printf("%s criterion %2d: %s (%.2fs): %s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    seconds, outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
