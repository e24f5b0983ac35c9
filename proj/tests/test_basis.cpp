#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "volconv/basis.hpp"
#include "volconv/polyseries.hpp"

using namespace volconv;

TEST(BasisSpec, GegenbauerParameterRange) {
    EXPECT_NO_THROW(BasisSpec::gegenbauer(2.0));
    EXPECT_NO_THROW(BasisSpec::gegenbauer(-0.4));
    EXPECT_THROW(BasisSpec::gegenbauer(0.0), std::invalid_argument);
    EXPECT_THROW(BasisSpec::gegenbauer(-0.5), std::invalid_argument);
    EXPECT_THROW(BasisSpec::gegenbauer(-1.0), std::invalid_argument);
}

TEST(BasisSpec, JacobiParameterRange) {
    EXPECT_NO_THROW(BasisSpec::jacobi(2.0, 1.5));
    EXPECT_THROW(BasisSpec::jacobi(-1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(BasisSpec::jacobi(0.0, -1.2), std::invalid_argument);
    EXPECT_THROW(BasisSpec::jacobi(-0.5, -0.5), DegenerateParameter);
    EXPECT_THROW(BasisSpec::jacobi(-0.2, -0.8), DegenerateParameter);
}

TEST(BasisSpec, LaguerreScaleMustBePositive) {
    EXPECT_NO_THROW(BasisSpec::weighted_laguerre(0.5));
    EXPECT_THROW(BasisSpec::weighted_laguerre(0.0), std::invalid_argument);
    EXPECT_THROW(BasisSpec::weighted_laguerre(-1.0), std::invalid_argument);
}

TEST(BasisSpec, EqualityIgnoresUnusedParameters) {
    BasisSpec a = BasisSpec::chebyshev();
    BasisSpec b = a;
    b.lambda = 3.0;
    EXPECT_TRUE(a == b);
    EXPECT_FALSE(BasisSpec::gegenbauer(1.0) == BasisSpec::gegenbauer(2.0));
    EXPECT_FALSE(BasisSpec::legendre() == BasisSpec::chebyshev());
}

TEST(BasisValueAtMinusOne, Chebyshev) {
    EXPECT_EQ(basis_value_at_minus_one(BasisSpec::chebyshev(), 7), -1.0);
    EXPECT_EQ(basis_value_at_minus_one(BasisSpec::chebyshev(), 0), 1.0);
}

TEST(BasisValueAtMinusOne, GegenbauerLambdaTwo) {
    EXPECT_DOUBLE_EQ(basis_value_at_minus_one(BasisSpec::gegenbauer(2.0), 2), 10.0);
}

TEST(BasisValueAtMinusOne, JacobiFirstDegree) {
    EXPECT_DOUBLE_EQ(basis_value_at_minus_one(BasisSpec::jacobi(2.0, 1.5), 1), -2.5);
}

TEST(BasisValueAtMinusOne, GegenbauerHalfIsLegendre) {
    for (std::size_t n = 0; n <= 50; ++n) {
        const double g = basis_value_at_minus_one(BasisSpec::gegenbauer(0.5), n);
        const double l = basis_value_at_minus_one(BasisSpec::legendre(), n);
        EXPECT_NEAR(g, l, 1e-13 * std::abs(l)) << "n=" << n;
    }
}

TEST(BasisValueAtMinusOne, MatchesRecurrence) {
    for (const auto& b : {BasisSpec::chebyshev(), BasisSpec::legendre(), BasisSpec::gegenbauer(2.0),
                          BasisSpec::gegenbauer(0.3), BasisSpec::jacobi(2.0, 1.5), BasisSpec::jacobi(-0.3, 0.7)}) {
        const auto rec = basis_values<long double>(b, 30, -1.0L);
        const auto direct = basis_values_at_minus_one(b, 30);
        for (std::size_t n = 0; n <= 30; ++n) {
            EXPECT_NEAR(direct[n], static_cast<double>(rec[n]), 1e-12 * std::abs(direct[n])) << b.name() << " n=" << n;
            EXPECT_EQ(direct[n], basis_value_at_minus_one(b, n));
        }
    }
}

TEST(BasisValueAtMinusOne, NoOverflowAtLargeDegree) {
    const double v = basis_value_at_minus_one(BasisSpec::gegenbauer(2.0), 5000);
    EXPECT_TRUE(std::isfinite(v));
    // (4)_n / n! = (n+1)(n+2)(n+3)/6
    EXPECT_NEAR(v, 5001.0 * 5002.0 * 5003.0 / 6.0, 1e-9 * std::abs(v));
}

TEST(BasisValueAtMinusOne, LaguerreUnsupported) {
    EXPECT_THROW(basis_value_at_minus_one(BasisSpec::weighted_laguerre(), 3), UnsupportedBasis);
}

TEST(BasisValues, ChebyshevIsCosine) {
    const double x = 0.37;
    const auto p = basis_values<double>(BasisSpec::chebyshev(), 20, x);
    for (std::size_t n = 0; n <= 20; ++n) EXPECT_NEAR(p[n], std::cos(n * std::acos(x)), 1e-14);
}

TEST(BasisValues, UnitEndpointNormalizations) {
    for (std::size_t n = 0; n <= 12; ++n) {
        EXPECT_NEAR(basis_values<double>(BasisSpec::legendre(), n, 1.0)[n], 1.0, 1e-14);
        // C_n^(lambda)(1) = (2 lambda)_n / n!
        double c = 1.0;
        for (std::size_t j = 0; j < n; ++j) c *= (3.0 + j) / (j + 1.0);
        EXPECT_NEAR(basis_values<double>(BasisSpec::gegenbauer(1.5), n, 1.0)[n], c, 1e-12 * c);
    }
}

TEST(Clenshaw, MatchesDirectSum) {
    const std::vector<double> c{0.3, -0.2, 0.7, 0.1, -0.5};
    for (const auto& b : {BasisSpec::chebyshev(), BasisSpec::legendre(), BasisSpec::gegenbauer(2.0),
                          BasisSpec::jacobi(2.0, 1.5), BasisSpec::weighted_laguerre()}) {
        for (double x : {-1.0, -0.4, 0.0, 0.8, 1.0}) {
            const auto p = basis_values<double>(b, 4, x);
            double direct = 0.0;
            for (std::size_t k = 0; k < c.size(); ++k) direct += c[k] * p[k];
            EXPECT_NEAR(clenshaw<double>(b, c, x), direct, 1e-14) << b.name() << " x=" << x;
        }
    }
}
