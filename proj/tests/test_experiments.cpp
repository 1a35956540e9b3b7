#include <gtest/gtest.h>

#include "goldenbeta/experiments.hpp"

using namespace goldenbeta;

namespace {

GoldenScalar rat(long long a, long long b) { return GoldenScalar(Rational(a, b)); }
const GoldenScalar& inv_sqrt5() {
    static const GoldenScalar v = GoldenScalar::sqrt5().inverse();
    return v;
}

InvarianceSpec level_two(const GoldenScalar& c00, const GoldenScalar& c01, const GoldenScalar& c10) {
    InvarianceSpec spec;
    spec.m = 2;
    spec.constants[Word::from_string("00")] = c00;
    spec.constants[Word::from_string("01")] = c01;
    spec.constants[Word::from_string("10")] = c10;
    return spec;
}

} // namespace

TEST(Invariance, FBetaAtLevelTwo) {
    const GoldenScalar high = (GoldenScalar::one() + GoldenScalar::beta()) * inv_sqrt5();
    const GoldenScalar low = GoldenScalar::beta() * inv_sqrt5();
    const InvarianceReport r = invariance_check(level_two(high, high, low));
    EXPECT_TRUE(r.constraints_hold());
    EXPECT_TRUE(r.pass());
}

TEST(Invariance, OneParameterFamily) {
    const GoldenScalar s = GoldenScalar::one();
    const InvarianceSpec spec =
        level_two(s, (GoldenScalar::one() + GoldenScalar::beta()) * inv_sqrt5(), pow_beta(3) * inv_sqrt5() - s);
    EXPECT_EQ(solved_family(2, {s}).constants, spec.constants);
    const InvarianceReport r = invariance_check(spec);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(pushforward_direct(density_from_constants(spec), 2), f_beta());
}

TEST(Invariance, PerturbationFails) {
    const GoldenScalar s = GoldenScalar::one() + rat(1, 1000000);
    const InvarianceReport r =
        invariance_check(level_two(s, (GoldenScalar::one() + GoldenScalar::beta()) * inv_sqrt5(),
                                   pow_beta(3) * inv_sqrt5() - GoldenScalar::one()));
    EXPECT_FALSE(r.pass());
    EXPECT_EQ(r.residual_total, rat(1, 1000000));
    EXPECT_EQ(r.residual_zero, rat(1, 1000000));
}

TEST(Invariance, RejectsMalformedSpecs) {
    InvarianceSpec spec = level_two(GoldenScalar::one(), GoldenScalar::one(), GoldenScalar::one());
    spec.constants.erase(Word::from_string("01"));
    EXPECT_THROW(invariance_check(spec), ValidationError);
    EXPECT_THROW(invariance_check(level_two(GoldenScalar(-1), GoldenScalar::one(), GoldenScalar::one())),
                 ValidationError);
    EXPECT_THROW(solved_family(3, {}), ValidationError);
}

TEST(Invariance, LevelOneFamilyIsFBeta) {
    EXPECT_EQ(free_parameter_count(1), 0);
    EXPECT_EQ(density_from_constants(solved_family(1, {})), f_beta());
}

TEST(Invariance, PrintedOrientationFailsForFBeta) {
    // The swapped assignment of the two totals is inconsistent: the subset would exceed the whole.
    for (int m = 1; m <= 6; ++m) EXPECT_GT(invariance_total(m), invariance_zero_total(m));
    for (int m = 1; m <= 6; ++m) {
        InvarianceSpec spec;
        spec.m = m;
        for (const auto& w : enumerate(m)) spec.constants[w] = f_beta()(left_endpoint(w));
        EXPECT_TRUE(invariance_check(spec).pass()) << m;
    }
}

TEST(InvarianceProperty, SolvedFamilyMembersAreInvariant) {
    for (int m = 1; m <= 6; ++m)
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const InvarianceReport r = invariance_check(solved_family(m, random_family_params(m, seed)));
            ASSERT_TRUE(r.pass()) << "m=" << m << " seed=" << seed;
        }
}

TEST(Convergence, UniformMatchesClosedForm) {
    const ConvergenceReport r = convergence_study(uniform_density(), 12);
    ASSERT_EQ(r.rows.size(), 12U);
    for (const auto& row : r.rows) EXPECT_EQ(row.tv.value, pow_beta(-2 * row.n - 3) * inv_sqrt5());
    EXPECT_NEAR(r.fitted_rate, -2 * std::log(std::numbers::phi), 1e-9);
    EXPECT_TRUE(r.pass());
}

TEST(Convergence, FBetaRowsAreZero) {
    const ConvergenceReport r = convergence_study(f_beta(), 10);
    for (const auto& row : r.rows) EXPECT_TRUE(row.tv.value.is_zero());
    EXPECT_TRUE(r.bound_ok());
}

TEST(Convergence, LinearStartPasses) {
    const ConvergenceReport r = convergence_study(linear_density(), 15, 2.0);
    EXPECT_TRUE(r.pass());
    for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_LE(r.rows[i].d_tv, r.rows[i - 1].d_tv);
}

TEST(ConvergenceProperty, RowsWithinCalibratedBound) {
    std::vector<PiecewisePoly> starts{uniform_density(), linear_density(), quadratic_density(), f_beta()};
    for (std::uint64_t seed = 1; seed <= 3; ++seed) starts.push_back(random_piecewise_linear(seed));
    for (const auto& f : starts) EXPECT_TRUE(convergence_study(f, 20).bound_ok());
}

TEST(Convergence, FittedSlope) {
    EXPECT_NEAR(fitted_log_slope({1, 2, 3}, {std::exp(-1.0), std::exp(-2.0), std::exp(-3.0)}), -1.0, 1e-12);
}

TEST(MonteCarlo, Threshold) { EXPECT_NEAR(ks_threshold(100000), 0.0051545, 1e-6); }

TEST(MonteCarlo, IdentityIterationMatchesStart) {
    const MonteCarloReport r = monte_carlo(uniform_density(), 0, 20000, 4);
    EXPECT_LT(r.ks_statistic, r.threshold);
}

TEST(MonteCarlo, ReproducibleAndIndependentOfJobs) {
    const ReferenceGrid grid = make_reference_grid(linear_density(), 6);
    const MonteCarloReport a = monte_carlo(linear_density(), 6, 30000, 42, grid, 1);
    const MonteCarloReport b = monte_carlo(linear_density(), 6, 30000, 42, grid, 1);
    const MonteCarloReport c = monte_carlo(linear_density(), 6, 30000, 42, grid, 4);
    EXPECT_EQ(a.ks_statistic, b.ks_statistic);
    EXPECT_EQ(a.ks_statistic, c.ks_statistic);
    EXPECT_NE(a.ks_statistic, monte_carlo(linear_density(), 6, 30000, 43, grid, 1).ks_statistic);
}

TEST(MonteCarlo, ReferenceGridMatchesExactCdf) {
    const ReferenceGrid grid = make_reference_grid(linear_density(), 3, 50);
    const Cdf exact(transfer_power(linear_density(), 3));
    ASSERT_EQ(grid.xs.size(), 50U);
    for (std::size_t i = 0; i < grid.xs.size(); ++i) {
        const GoldenScalar x(Rational(static_cast<long long>(2 * i + 1), 100));
        EXPECT_DOUBLE_EQ(grid.xs[i], to_double(x));
        EXPECT_NEAR(grid.cdf[i], to_double(exact(x)), 1e-15);
    }
}

TEST(MonteCarlo, SamplerInvertsCdf) {
    for (const auto& f : {linear_density(), quadratic_density(), random_piecewise_linear(8)}) {
        const FloatSampler sample(f);
        const Cdf cdf(f);
        for (int k = 1; k < 20; ++k) {
            const double u = k / 20.0;
            const double x = sample(u);
            EXPECT_NEAR(to_double(cdf(GoldenScalar(Rational(x)))), u, 1e-12);
        }
    }
}

TEST(MonteCarlo, Errors) {
    EXPECT_THROW(monte_carlo(uniform_density(), 31, 10, 1, ReferenceGrid{31, {}, {}}), PrecisionError);
    EXPECT_THROW(monte_carlo(uniform_density(), 3, 0, 1), DomainError);
}

TEST(RandomDensity, IsSeededDensity) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const PiecewisePoly f = random_piecewise_linear(seed);
        EXPECT_TRUE(f.is_density());
        EXPECT_LE(f.degree(), 1);
        EXPECT_EQ(f, random_piecewise_linear(seed));
    }
}

TEST(MonteCarloProperty, RejectionRateNearNominalLevel) {
    // Under a correct sampler the 1% test rejects about 1 seed in 100 and sqrt(N) KS averages about 0.87.
    const ReferenceGrid grid = make_reference_grid(uniform_density(), 8);
    int rejections = 0;
    double scaled_sum = 0;
    const int seeds = 200;
    for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
        const MonteCarloReport r = monte_carlo(uniform_density(), 8, 10000, seed, grid);
        rejections += r.pass() ? 0 : 1;
        scaled_sum += r.ks_statistic * std::sqrt(10000.0);
    }
    EXPECT_LE(rejections, 8);
    EXPECT_GT(scaled_sum / seeds, 0.7);
    EXPECT_LT(scaled_sum / seeds, 1.0);
}
