#include <gtest/gtest.h>

#include <cmath>

#include "goldenbeta/roots.hpp"
#include "goldenbeta/random.hpp"
#include "oracles.hpp"

using namespace goldenbeta;

namespace {
GoldenScalar rat(long long a, long long b) { return GoldenScalar(Rational(a, b)); }
GoldenScalar gs(long long p, long long q) { return GoldenScalar(Rational(p), Rational(q)); }
}

TEST(Polynomial, Basics) {
    const Polynomial p({gs(1, 0), gs(0, 0), gs(3, 0)});  // 1 + 3x^2
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p(GoldenScalar::beta()), gs(4, 3));
    EXPECT_EQ(Polynomial({gs(1, 0), gs(0, 0)}).degree(), 0);
    EXPECT_EQ(Polynomial().degree(), -1);
    EXPECT_EQ(p.derivative(), Polynomial({gs(0, 0), gs(6, 0)}));
    EXPECT_EQ(p.antiderivative().derivative(), p);
    EXPECT_EQ(p.integral(GoldenScalar::zero(), GoldenScalar::one()), gs(2, 0));
}

TEST(Polynomial, ComposeAffine) {
    const Polynomial p({gs(0, 0), gs(0, 0), gs(1, 0)});  // x^2
    const Polynomial q = p.compose_affine(gs(1, 0), GoldenScalar::beta());
    for (int k = 0; k < 5; ++k) {
        const GoldenScalar x = rat(k, 3);
        EXPECT_EQ(q(x), p(gs(1, 0) + GoldenScalar::beta() * x));
    }
}

TEST(Polynomial, DivMod) {
    SeededRng rng(17);
    for (int i = 0; i < 50; ++i) {
        std::vector<GoldenScalar> a, b;
        for (int k = 0; k < 5; ++k) a.push_back(gs(rng.uniform_int(-9, 9), rng.uniform_int(-9, 9)));
        for (int k = 0; k < 3; ++k) b.push_back(gs(rng.uniform_int(-9, 9), rng.uniform_int(-9, 9)));
        b.push_back(gs(1, 1));
        const Polynomial pa(a), pb(b);
        const auto [quot, rem] = divmod(pa, pb);
        ASSERT_LT(rem.degree(), pb.degree());
        ASSERT_EQ(quot * pb + rem, pa);
    }
}

TEST(Roots, LinearRootIsExact) {
    const Polynomial p = Polynomial::linear_factor(beta_inverse());
    const auto roots = sign_change_roots(p, GoldenScalar::zero(), GoldenScalar::one());
    ASSERT_EQ(roots.size(), 1U);
    EXPECT_TRUE(roots[0].exact());
    EXPECT_EQ(roots[0].lo, beta_inverse());
}

TEST(Roots, DoubleRootHasNoSignChange) {
    const Polynomial p = Polynomial::linear_factor(rat(1, 3)) * Polynomial::linear_factor(rat(1, 3));
    EXPECT_TRUE(sign_change_roots(p, GoldenScalar::zero(), GoldenScalar::one()).empty());
    const Polynomial cubic = p * Polynomial::linear_factor(rat(1, 3));
    EXPECT_EQ(sign_change_roots(cubic, GoldenScalar::zero(), GoldenScalar::one()).size(), 1U);
}

TEST(Roots, IrrationalRootsAreBracketed) {
    // 3x^2 - 1 and x^3 - 2x + 1/2 on [0, 1]; float oracle for the root locations.
    const Polynomial quad({gs(-1, 0), gs(0, 0), gs(3, 0)});
    const auto r = sign_change_roots(quad, GoldenScalar::zero(), GoldenScalar::one());
    ASSERT_EQ(r.size(), 1U);
    EXPECT_LE(r[0].width(), default_root_tolerance());
    EXPECT_NEAR(to_double(r[0].midpoint()), static_cast<double>(1 / std::sqrt(3.0L)), 2e-16);

    const Polynomial cubic({rat(1, 2), gs(-2, 0), gs(0, 0), gs(1, 0)});
    const auto rc = sign_change_roots(cubic, GoldenScalar::zero(), GoldenScalar::one());
    ASSERT_EQ(rc.size(), 1U);
    const double x = to_double(rc[0].midpoint());
    EXPECT_NEAR(x * x * x - 2 * x + 0.5, 0.0, 1e-15);
}

TEST(Roots, RootAtBisectionMidpointIsFound) {
    // Roots 1/2 and 1/4 land exactly on bisection midpoints of [0, 1].
    const Polynomial p = Polynomial::linear_factor(rat(1, 2)) * Polynomial::linear_factor(rat(1, 4)) *
                         Polynomial::linear_factor(rat(9, 10));
    const auto r = sign_change_roots(p, GoldenScalar::zero(), GoldenScalar::one());
    ASSERT_EQ(r.size(), 3U);
    EXPECT_EQ(r[0].lo, rat(1, 4));
    EXPECT_EQ(r[1].lo, rat(1, 2));
}

TEST(RootsProperty, AbsIntegralMatchesQuadrature) {
    SeededRng rng(23);
    for (int i = 0; i < 40; ++i) {
        std::vector<GoldenScalar> c;
        for (int k = 0; k <= 3; ++k) c.push_back(rat(rng.uniform_int(-20, 20), rng.uniform_int(1, 6)));
        const Polynomial p(c);
        const AbsIntegral exact = abs_integral(p, GoldenScalar::zero(), GoldenScalar::one());
        std::vector<long double> cf;
        for (const auto& v : c) cf.push_back(oracle::eval(v));
        auto signed_value = [&](long double x) {
            long double acc = 0;
            for (std::size_t k = cf.size(); k-- > 0;) acc = acc * x + cf[k];
            return acc;
        };
        auto g = [&](long double x) { return std::fabs(signed_value(x)); };
        // Float root scan, then exact-degree quadrature between consecutive cuts.
        std::vector<long double> cuts{0};
        const int steps = 20000;
        for (int k = 0; k < steps; ++k) {
            long double lo = static_cast<long double>(k) / steps, hi = static_cast<long double>(k + 1) / steps;
            if ((signed_value(lo) < 0) == (signed_value(hi) < 0)) continue;
            for (int it = 0; it < 80; ++it) {
                const long double mid = (lo + hi) / 2;
                ((signed_value(mid) < 0) == (signed_value(lo) < 0) ? lo : hi) = mid;
            }
            cuts.push_back((lo + hi) / 2);
        }
        cuts.push_back(1);
        long double approx = 0;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) approx += oracle::gauss_legendre(g, cuts[k], cuts[k + 1], 1);
        ASSERT_NEAR(to_double(exact.value), static_cast<double>(approx), 1e-13) << p.to_string();
        ASSERT_LT(exact.error, rat(1, 1000000000) * rat(1, 1000000000) * rat(1, 1000000000));
    }
}
