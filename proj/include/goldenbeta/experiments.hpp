#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "goldenbeta/density.hpp"
#include "goldenbeta/dynamics.hpp"
#include "goldenbeta/errors.hpp"
#include "goldenbeta/golden_scalar.hpp"
#include "goldenbeta/partition.hpp"
#include "goldenbeta/random.hpp"
#include "goldenbeta/words.hpp"

namespace goldenbeta {

// ---- Exact invariance of piecewise-constant densities ------------------------

/// Constants C_J >= 0 on the level-m intervals I_{m,J}.
struct InvarianceSpec {
    int m = 1;
    std::map<Word, GoldenScalar> constants;
};

/// Required sum of C_J over all of Omega_m: beta^m (1 + beta) / sqrt 5.
inline GoldenScalar invariance_total(int m) { return pow_beta(m + 2) * GoldenScalar::sqrt5().inverse(); }

/// Required sum of C_J over words ending in 0: beta^{m+1} / sqrt 5.
inline GoldenScalar invariance_zero_total(int m) { return pow_beta(m + 1) * GoldenScalar::sqrt5().inverse(); }

/// The density equal to C_J on each I_{m,J}.
inline PiecewisePoly density_from_constants(const InvarianceSpec& spec) {
    std::vector<GoldenScalar> breakpoints;
    std::vector<Polynomial> pieces;
    for (const auto& [word, c] : spec.constants) {
        breakpoints.push_back(left_endpoint(word));
        pieces.push_back(Polynomial::constant(c));
    }
    breakpoints.push_back(GoldenScalar::one());
    return PiecewisePoly(std::move(breakpoints), std::move(pieces));
}

/// Number of free parameters of the solved family at level m.
inline int free_parameter_count(int m) { return static_cast<int>(fibonacci_u64(m + 2)) - 2; }

/*
 * The general solution of the two linear constraints at level m.
 *
 * Words are grouped by last digit; in lexicographic order every word except the
 * last of its group takes the next parameter, and the last word of each group
 * takes what remains of that group's required total.
 */
inline InvarianceSpec solved_family(int m, const std::vector<GoldenScalar>& params) {
    if (m < 1) throw DomainError("level m must be >= 1");
    if (static_cast<int>(params.size()) != free_parameter_count(m))
        throw ValidationError("level " + std::to_string(m) + " needs " + std::to_string(free_parameter_count(m)) +
                              " parameters, got " + std::to_string(params.size()));
    const auto words = enumerate(m);
    const GoldenScalar group_total[2] = {invariance_zero_total(m), invariance_total(m) - invariance_zero_total(m)};
    const Word* last_in_group[2] = {nullptr, nullptr};
    for (const auto& w : words) last_in_group[w.last()] = &w;

    InvarianceSpec spec;
    spec.m = m;
    GoldenScalar used[2];
    std::size_t next = 0;
    for (const auto& w : words) {
        if (&w == last_in_group[w.last()]) continue;
        spec.constants[w] = params[next++];
        used[w.last()] += spec.constants[w];
    }
    for (int g = 0; g < 2; ++g) spec.constants[*last_in_group[g]] = group_total[g] - used[g];
    return spec;
}

/// Parameters of a random nonnegative member of the solved family: each group total is split
/// in proportion to seeded integer weights.
inline std::vector<GoldenScalar> random_family_params(int m, std::uint64_t seed) {
    if (m < 1) throw DomainError("level m must be >= 1");
    SeededRng rng(seed);
    const auto words = enumerate(m);
    const GoldenScalar group_total[2] = {invariance_zero_total(m), invariance_total(m) - invariance_zero_total(m)};
    std::vector<std::int64_t> weights;
    std::int64_t weight_sum[2] = {0, 0};
    for (const auto& w : words) {
        weights.push_back(rng.uniform_int(0, 100));
        weight_sum[w.last()] += weights.back();
    }
    for (auto& s : weight_sum)
        if (s == 0) s = 1;
    const Word* last_in_group[2] = {nullptr, nullptr};
    for (const auto& w : words) last_in_group[w.last()] = &w;

    std::vector<GoldenScalar> params;
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Word& w = words[i];
        if (&w == last_in_group[w.last()]) continue;
        params.push_back(group_total[w.last()] * Rational(weights[i], weight_sum[w.last()]));
    }
    return params;
}

struct InvarianceReport {
    int m = 0;
    GoldenScalar residual_total;  // sum over Omega_m minus its required value
    GoldenScalar residual_zero;   // sum over Omega_{m,0} minus its required value
    bool pushforward_matches = false;
    bool invariant_after_step = false;

    bool constraints_hold() const { return residual_total.is_zero() && residual_zero.is_zero(); }
    bool pass() const { return constraints_hold() && pushforward_matches && invariant_after_step; }
};

/// Checks both constraint sums exactly; when they hold, confirms f_m = f_beta and one more step stays at f_beta.
inline InvarianceReport invariance_check(const InvarianceSpec& spec) {
    if (spec.m < 1) throw DomainError("level m must be >= 1");
    const auto words = enumerate(spec.m);
    if (spec.constants.size() != words.size())
        throw ValidationError("constants must cover exactly Omega_" + std::to_string(spec.m));
    GoldenScalar sum_all;
    GoldenScalar sum_zero;
    for (const auto& w : words) {
        auto it = spec.constants.find(w);
        if (it == spec.constants.end()) throw ValidationError("missing constant for word " + w.to_string());
        if (it->second.sign() < 0) throw ValidationError("negative constant for word " + w.to_string());
        sum_all += it->second;
        if (w.last() == 0) sum_zero += it->second;
    }
    InvarianceReport report;
    report.m = spec.m;
    report.residual_total = sum_all - invariance_total(spec.m);
    report.residual_zero = sum_zero - invariance_zero_total(spec.m);
    if (!report.constraints_hold()) return report;

    const PiecewisePoly f = density_from_constants(spec);
    const PiecewisePoly target = f_beta();
    const PiecewisePoly fm = pushforward_direct(f, spec.m, std::max(spec.m, kDefaultDirectCap));
    report.pushforward_matches = fm == target;
    report.invariant_after_step = transfer_step(fm) == target;
    return report;
}

// ---- Convergence to the invariant density ------------------------------------

struct ConvergenceRow {
    int n = 0;
    Distance tv;          // exact or certified d_TV(P_n, P_beta)
    double d_tv = 0.0;    // rounded value for reporting
    double bound = 0.0;   // C beta^{-2n/3}
    bool within_bound = false;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    double fitted_rate = -std::numeric_limits<double>::infinity();  // slope of ln d_TV against n
    double bound_rate = -2.0 / 3.0 * std::log(std::numbers::phi);
    double calibration = 0.0;  // C, from rows n <= 3
    double lip_bound = 0.0;
    bool rate_ok = false;

    bool bound_ok() const {
        return std::all_of(rows.begin(), rows.end(), [](const ConvergenceRow& r) { return r.within_bound; });
    }
    bool pass() const { return bound_ok() && rate_ok; }
};

inline constexpr double kRateSlack = 1e-3;

/// Least-squares slope of ln(values) against ns, over strictly positive values.
inline double fitted_log_slope(const std::vector<int>& ns, const std::vector<double>& values) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (!(values[i] > 0.0)) continue;
        const double x = ns[i];
        const double y = std::log(values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 2) return -std::numeric_limits<double>::infinity();
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

/*
 * d_TV(P_n, P_beta) for n = 1..n_max along the transfer-operator path.
 *
 * The bound d_n <= C beta^{-2n/3}, with C the smallest constant covering rows n <= 3,
 * is decided exactly after cubing both sides: d_n^3 beta^{2n} <= max_{k<=3} d_k^3 beta^{2k}.
 * Upper ends of certified intervals are used throughout.
 */
inline ConvergenceReport convergence_study(const PiecewisePoly& f, int n_max, double lip_bound = 0.0,
                                           int max_degree = kDefaultMaxDegree,
                                           const GoldenScalar& tol = default_root_tolerance()) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    f.require_density();
    const PiecewisePoly target = f_beta();

    ConvergenceReport report;
    report.lip_bound = lip_bound;
    std::vector<GoldenScalar> scaled_cubes;  // d_n^3 beta^{2n}
    PiecewisePoly fn = f;
    for (int n = 1; n <= n_max; ++n) {
        fn = transfer_step(fn, max_degree);
        ConvergenceRow row;
        row.n = n;
        row.tv = tv_distance(fn, target, tol);
        row.d_tv = to_double(row.tv.value);
        const GoldenScalar up = row.tv.upper();
        scaled_cubes.push_back(up * up * up * pow_beta(2 * n));
        report.rows.push_back(std::move(row));
    }
    GoldenScalar calibration_cube;
    for (std::size_t k = 0; k < std::min<std::size_t>(3, scaled_cubes.size()); ++k)
        calibration_cube = max(calibration_cube, scaled_cubes[k]);
    report.calibration = std::cbrt(to_double(calibration_cube));

    std::vector<int> ns;
    std::vector<double> values;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        auto& row = report.rows[i];
        row.within_bound = scaled_cubes[i] <= calibration_cube;
        row.bound = report.calibration * std::pow(std::numbers::phi, -2.0 * row.n / 3.0);
        ns.push_back(row.n);
        values.push_back(row.d_tv);
    }
    report.fitted_rate = fitted_log_slope(ns, values);
    report.rate_ok = report.fitted_rate <= report.bound_rate + kRateSlack;
    return report;
}

// ---- Monte Carlo cross-check of the pushforward CDF --------------------------

inline constexpr int kDefaultGridPoints = 1000;
inline constexpr int kMonteCarloShards = 8;

/// Critical value of the one-sample KS statistic at the 1% level, 1.63 / sqrt(N).
inline double ks_threshold(std::uint64_t samples) { return 1.63 / std::sqrt(static_cast<double>(samples)); }

/// F_n at x_i = (i + 1/2) / points, computed exactly and rounded.
struct ReferenceGrid {
    int n = 0;
    std::vector<double> xs;
    std::vector<double> cdf;
};

inline ReferenceGrid make_reference_grid(const PiecewisePoly& f, int n, int points = kDefaultGridPoints,
                                         unsigned jobs = 1) {
    if (points < 1) throw DomainError("grid needs at least one point");
    const PushforwardCdf Fn(f, n);
    ReferenceGrid grid;
    grid.n = n;
    grid.xs.resize(static_cast<std::size_t>(points));
    grid.cdf.resize(static_cast<std::size_t>(points));
    auto work = [&](unsigned worker) {
        for (std::size_t i = worker; i < grid.xs.size(); i += jobs) {
            const GoldenScalar x(Rational(static_cast<long>(2 * i + 1), 2L * points), Rational(0));
            grid.xs[i] = to_double(x);
            grid.cdf[i] = to_double(Fn(x).value);
        }
    };
    if (jobs <= 1) {
        jobs = 1;
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    return grid;
}

/// Inverse-CDF sampler over a float copy of a piecewise-polynomial density.
class FloatSampler {
public:
    explicit FloatSampler(const PiecewisePoly& f) {
        f.require_density();
        double acc = 0.0;
        for (std::size_t i = 0; i < f.piece_count(); ++i) {
            Piece piece;
            piece.a = to_double(f.breakpoints()[i]);
            piece.b = to_double(f.breakpoints()[i + 1]);
            for (const auto& c : f.pieces()[i].coefficients()) piece.coeffs.push_back(to_double(c));
            piece.mass_before = acc;
            acc += to_double(f.pieces()[i].integral(f.breakpoints()[i], f.breakpoints()[i + 1]));
            pieces_.push_back(std::move(piece));
        }
        total_ = acc;
    }

    double operator()(double u) const {
        const double target_mass = u * total_;
        std::size_t i = 0;
        while (i + 1 < pieces_.size() && pieces_[i + 1].mass_before <= target_mass) ++i;
        const Piece& p = pieces_[i];
        const double target = std::max(0.0, target_mass - p.mass_before);
        double x;
        if (p.coeffs.size() <= 2) {
            // Solve (c1/2) z^2 + f(a) z = target for z = x - a, in the cancellation-free form.
            const double c0 = p.coeffs.empty() ? 0.0 : p.coeffs[0];
            const double c1 = p.coeffs.size() > 1 ? p.coeffs[1] : 0.0;
            const double fa = c0 + c1 * p.a;
            const double disc = std::max(0.0, fa * fa + 2.0 * c1 * target);
            const double denom = fa + std::sqrt(disc);
            x = denom > 0.0 ? p.a + 2.0 * target / denom : p.a;
        } else {
            double lo = p.a, hi = p.b;
            for (int it = 0; it < 64; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (p.mass(mid) < target)
                    lo = mid;
                else
                    hi = mid;
            }
            x = 0.5 * (lo + hi);
        }
        x = std::clamp(x, p.a, p.b);
        if (x >= 1.0) x = std::nextafter(1.0, 0.0);
        return x;
    }

private:
    struct Piece {
        double a = 0, b = 0, mass_before = 0;
        std::vector<double> coeffs;

        /// Integral of the piece from a to x.
        double mass(double x) const {
            double fx = 0, fa = 0;
            for (std::size_t k = coeffs.size(); k-- > 0;) {
                fx = fx * x + coeffs[k] / static_cast<double>(k + 1);
                fa = fa * a + coeffs[k] / static_cast<double>(k + 1);
            }
            return fx * x - fa * a;
        }
    };
    std::vector<Piece> pieces_;
    double total_ = 1.0;
};

struct MonteCarloReport {
    int n = 0;
    std::uint64_t samples = 0;
    double ks_statistic = 0.0;
    std::uint64_t seed = 0;
    double threshold = 0.0;

    bool pass() const { return ks_statistic < threshold; }
};

/// Seed of shard s; shards are fixed in number so results do not depend on the worker count.
inline std::uint64_t shard_seed(std::uint64_t seed, int shard) {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(shard) + 1));
}

/*
 * Draws samples from f, pushes them through n float steps of T_beta, and
 * compares the empirical CDF with the exact F_n on the reference grid.
 */
inline MonteCarloReport monte_carlo(const PiecewisePoly& f, int n, std::uint64_t samples, std::uint64_t seed,
                                    const ReferenceGrid& reference, unsigned jobs = 1,
                                    int depth_cap = kDefaultFloatDepthCap) {
    if (samples == 0) throw DomainError("need at least one sample");
    if (n < 0) throw DomainError("n must be >= 0");
    if (n > depth_cap)
        throw PrecisionError("float depth " + std::to_string(n) + " exceeds cap " + std::to_string(depth_cap));
    if (reference.n != n) throw ValidationError("reference grid was built for a different n");
    const FloatSampler sampler(f);

    std::vector<std::vector<double>> shards(kMonteCarloShards);
    std::vector<std::string> failures(kMonteCarloShards);
    auto run_shard = [&](int s) {
        const std::uint64_t count = samples / kMonteCarloShards + (static_cast<std::uint64_t>(s) < samples % kMonteCarloShards ? 1 : 0);
        SeededRng rng(shard_seed(seed, s));
        auto& out = shards[static_cast<std::size_t>(s)];
        out.reserve(count);
        try {
            for (std::uint64_t k = 0; k < count; ++k) out.push_back(iterate_float(sampler(rng.uniform01()), n, depth_cap));
        } catch (const PrecisionError& e) {
            failures[static_cast<std::size_t>(s)] = e.what();
        }
    };
    if (jobs <= 1) {
        for (int s = 0; s < kMonteCarloShards; ++s) run_shard(s);
    } else {
        for (int first = 0; first < kMonteCarloShards; first += static_cast<int>(jobs)) {
            std::vector<std::thread> threads;
            for (int s = first; s < std::min(kMonteCarloShards, first + static_cast<int>(jobs)); ++s) threads.emplace_back(run_shard, s);
            for (auto& t : threads) t.join();
        }
    }
    for (const auto& msg : failures)
        if (!msg.empty()) throw PrecisionError(msg);

    std::vector<double> all;
    all.reserve(samples);
    for (const auto& s : shards) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());

    MonteCarloReport report;
    report.n = n;
    report.samples = samples;
    report.seed = seed;
    report.threshold = ks_threshold(samples);
    for (std::size_t i = 0; i < reference.xs.size(); ++i) {
        const auto below = std::upper_bound(all.begin(), all.end(), reference.xs[i]) - all.begin();
        const double ecdf = static_cast<double>(below) / static_cast<double>(samples);
        report.ks_statistic = std::max(report.ks_statistic, std::abs(ecdf - reference.cdf[i]));
    }
    return report;
}

inline MonteCarloReport monte_carlo(const PiecewisePoly& f, int n, std::uint64_t samples, std::uint64_t seed,
                                    unsigned jobs = 1) {
    return monte_carlo(f, n, samples, seed, make_reference_grid(f, n, kDefaultGridPoints, jobs), jobs);
}

// ---- Random test densities -----------------------------------------------------

/// Seeded piecewise-linear density with breakpoints of the form k/beta + r (k in {0,1}, r a small rational),
/// nonnegative endpoint values, normalized exactly.
inline PiecewisePoly random_piecewise_linear(std::uint64_t seed, int interior_breakpoints = 3) {
    SeededRng rng(seed);
    std::vector<GoldenScalar> points{GoldenScalar::zero(), GoldenScalar::one()};
    int attempts = 0;
    while (static_cast<int>(points.size()) < interior_breakpoints + 2 && attempts++ < 1000) {
        const std::int64_t den = rng.uniform_int(2, 9);
        const std::int64_t num = rng.uniform_int(-den + 1, den - 1);
        GoldenScalar t = GoldenScalar(Rational(num, den), Rational(0)) +
                         (rng.uniform_int(0, 1) == 1 ? beta_inverse() : GoldenScalar::zero());
        if (t.sign() <= 0 || !(t < GoldenScalar::one())) continue;
        if (std::find(points.begin(), points.end(), t) != points.end()) continue;
        points.push_back(std::move(t));
    }
    std::sort(points.begin(), points.end());

    std::vector<Polynomial> pieces;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const GoldenScalar va(rng.uniform_int(0, 8));
        const GoldenScalar vb(rng.uniform_int(i == 0 ? 1 : 0, 8));
        const GoldenScalar slope = (vb - va) / (points[i + 1] - points[i]);
        pieces.push_back(Polynomial({va - slope * points[i], slope}));
    }
    PiecewisePoly raw(points, pieces);
    const GoldenScalar mass_inv = raw.integral().inverse();
    return mass_inv * raw;
}

} // namespace goldenbeta
