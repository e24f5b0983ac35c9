#include <cmath>

#include <gtest/gtest.h>

#include "volconv/fit.hpp"
#include "volconv/named_functions.hpp"
#include "volconv/random.hpp"

using namespace volconv;

TEST(FitChebyshev, Identity) {
    const auto s = fit_chebyshev([](double x) { return x; }, canonical_interval);
    ASSERT_EQ(s.degree(), 1u);
    EXPECT_NEAR(s.coeffs()[0], 0.0, 1e-16);
    EXPECT_NEAR(s.coeffs()[1], 1.0, 1e-15);
}

TEST(FitChebyshev, ExponentialLeadingCoefficient) {
    // c_0 = I_0(1), c_1 = 2 I_1(1)
    const auto s = fit_chebyshev([](double x) { return std::exp(x); }, canonical_interval);
    EXPECT_NEAR(s.coeffs()[0], 1.2660658777520082, 1e-15);
    EXPECT_NEAR(s.coeffs()[1], 1.1303182079849700, 1e-15);
    EXPECT_LE(s.degree(), 16u);
}

TEST(FitChebyshev, RenewalKernelDegree) {
    const auto f = fit_chebyshev(named::renewal_f, Interval{0.0, 2.0});
    EXPECT_LE(f.degree(), 16u);
    for (int i = 0; i <= 1000; ++i) {
        const double x = 2.0 * i / 1000;
        EXPECT_NEAR(f(x), named::renewal_f(x), 5e-16);
    }
}

TEST(FitChebyshev, RenewalSolutionDegree) {
    const auto u = fit_chebyshev(named::renewal_u, Interval{0.0, 2.0});
    EXPECT_LE(u.degree(), 17u);
    for (int i = 0; i <= 1000; ++i) {
        const double x = 2.0 * i / 1000;
        EXPECT_NEAR(u(x), named::renewal_u(x), 5e-16);
    }
}

TEST(FitChebyshev, RecoversPolynomialCoefficients) {
    for (std::size_t d : {0u, 1u, 7u, 40u, 100u}) {
        const auto c = random_kernel(d, 17 + d);
        PolySeries p(BasisSpec::chebyshev(), c);
        const auto s = fit_chebyshev([&](double x) { return p(x); }, canonical_interval);
        ASSERT_GE(s.coeffs().size(), d + 1);
        for (std::size_t k = 0; k < s.coeffs().size(); ++k)
            EXPECT_NEAR(s.coeffs()[k], k <= d ? c[k] : 0.0, 4e-16 * (d + 1)) << "d=" << d << " k=" << k;
    }
}

TEST(FitChebyshev, ZeroFunction) {
    const auto s = fit_chebyshev([](double) { return 0.0; }, Interval{-3.0, 4.0});
    EXPECT_EQ(s.degree(), 0u);
    EXPECT_EQ(s.coeffs()[0], 0.0);
}

TEST(FitChebyshev, NotResolvedCarriesBestEffort) {
    ChopRule rule;
    rule.max_degree = 64;
    try {
        fit_chebyshev([](double x) { return std::abs(x); }, canonical_interval, rule);
        FAIL() << "expected NotResolved";
    } catch (const NotResolved& e) {
        EXPECT_GE(e.best().degree(), 32u);
        EXPECT_NEAR(e.best()(0.5), 0.5, 1e-2);
    }
}

TEST(FitChebyshev, RejectsBadArguments) {
    auto one = [](double) { return 1.0; };
    EXPECT_THROW(fit_chebyshev(one, Interval{1.0, 0.0}), std::invalid_argument);
    ChopRule bad;
    bad.rel_tol = 0.0;
    EXPECT_THROW(fit_chebyshev(one, canonical_interval, bad), std::invalid_argument);
    EXPECT_THROW(fit_chebyshev([](double) { return std::nan(""); }, canonical_interval), std::domain_error);
}

TEST(ChebyshevCoeffsFromValues, InterpolatesSamples) {
    // T_3 at cos(pi j / 4)
    std::vector<double> v(5);
    for (int j = 0; j <= 4; ++j) v[j] = std::cos(3 * std::acos(std::cos(M_PI * j / 4)));
    const auto c = chebyshev_coeffs_from_values(v);
    for (std::size_t k = 0; k < c.size(); ++k) EXPECT_NEAR(c[k], k == 3 ? 1.0 : 0.0, 1e-15);
}

TEST(FitLaguerre, RenewalKernelIsExactAtHalfScale) {
    const auto f = fit_laguerre(named::renewal_f, 2, 0.5);
    ASSERT_EQ(f.degree(), 2u);
    EXPECT_NEAR(f.coeffs()[0], 0.25, 1e-16);
    EXPECT_NEAR(f.coeffs()[1], -0.5, 1e-16);
    EXPECT_NEAR(f.coeffs()[2], 0.25, 1e-16);
}

TEST(FitLaguerre, DecayingOscillation) {
    const auto g = fit_laguerre(named::laguerre_g, 54, 0.5);
    for (int i = 0; i <= 2000; ++i) {
        const double x = 0.01 * i;
        EXPECT_NEAR(g(x), named::laguerre_g(x), 1e-15);
    }
}
