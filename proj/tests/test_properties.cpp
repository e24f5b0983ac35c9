#include <cmath>

#include <gtest/gtest.h>

#include "volconv/convmat.hpp"
#include "volconv/oracle.hpp"
#include "volconv/random.hpp"

// Seed-swept properties of the convolution matrices; each runs over 10 seeds.

using namespace volconv;

namespace {

const std::vector<BasisSpec>& finite_bases() {
    static const std::vector<BasisSpec> b{BasisSpec::chebyshev(), BasisSpec::legendre(), BasisSpec::gegenbauer(2.0),
                                          BasisSpec::gegenbauer(0.25), BasisSpec::jacobi(2.0, 1.5),
                                          BasisSpec::jacobi(-0.4, 0.3)};
    return b;
}

constexpr std::uint64_t kSeeds = 10;

}  // namespace

static void check_boundary_condition(const BasisSpec& b) {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        const std::size_t M = 2 * seed, N = 10 * seed + 5;
        const auto R = build(b, random_kernel(M, seed), N);
        const auto pm1 = basis_values_at_minus_one(b, R.rows());
        for (std::size_t n = 0; n <= N; ++n) {
            long double s = 0;
            for (std::size_t k = 0; k < R.rows(); ++k) s += static_cast<long double>(R(k, n)) * pm1[k];
            EXPECT_LE(std::abs(static_cast<double>(s)), 1e-12) << b.name() << " seed=" << seed << " n=" << n;
        }
    }
}

// For large p_k(-1) the residual is bounded below by sum_k |p_k(-1)| times the
// entry errors; this exceeds 1e-12 for lambda = 2 and, at the largest sizes,
// for (alpha, beta) = (2, 3/2).
TEST(BoundaryCondition, Chebyshev) { check_boundary_condition(BasisSpec::chebyshev()); }
TEST(BoundaryCondition, Legendre) { check_boundary_condition(BasisSpec::legendre()); }
TEST(BoundaryCondition, GegenbauerTwo) { check_boundary_condition(BasisSpec::gegenbauer(2.0)); }
TEST(BoundaryCondition, GegenbauerQuarter) { check_boundary_condition(BasisSpec::gegenbauer(0.25)); }
TEST(BoundaryCondition, JacobiTwoThreeHalves) { check_boundary_condition(BasisSpec::jacobi(2.0, 1.5)); }
TEST(BoundaryCondition, JacobiNegativeAlpha) { check_boundary_condition(BasisSpec::jacobi(-0.4, 0.3)); }

TEST(Properties, SymmetryOfBuiltAndOracleMatrices) {
    for (const auto& b : finite_bases())
        for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
            const std::size_t M = 1 + seed, N = 40 + 16 * seed;
            const auto a = random_kernel(M, seed);
            const auto D = to_dense(build(b, a, N));
            for (std::size_t k = M + 1; k <= N; ++k)
                for (std::size_t n = M + 1; n <= N; ++n) {
                    const double rho = symmetry_ratio(b, n, k);
                    EXPECT_LE(std::abs(D(n, k) - rho * D(k, n)), 1e-12 * std::max(1.0, std::abs(D(k, n))))
                        << b.name() << " seed=" << seed << " k=" << k << " n=" << n;
                }
            // The oracle knows nothing about symmetry.
            if (seed <= 3) {
                const auto O = conv_coeff_oracle_matrix(PolySeries(b, a), 40);
                for (std::size_t k = M + 1; k <= 40; ++k)
                    for (std::size_t n = M + 1; n <= 40; ++n)
                        EXPECT_LE(std::abs(O(n, k) - symmetry_ratio(b, n, k) * O(k, n)), 1e-12 * std::max(1.0, std::abs(O(k, n))))
                            << b.name() << " oracle seed=" << seed << " k=" << k << " n=" << n;
            }
        }
}

TEST(Properties, Commutativity) {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        const std::size_t M = 3 * seed, N = 30 - 2 * seed;
        const auto a = random_kernel(M, seed), b = random_kernel(N, seed + 1000);
        const auto ab = volconv::apply(build_chebyshev(a, N), b);
        const auto ba = volconv::apply(build_chebyshev(b, M), a);
        ASSERT_EQ(ab.size(), ba.size());
        for (std::size_t k = 0; k < ab.size(); ++k) EXPECT_NEAR(ab[k], ba[k], 1e-13) << "seed=" << seed << " k=" << k;
    }
}

TEST(Properties, CommutativityOtherBases) {
    for (const auto& basis : finite_bases())
        for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
            const auto a = random_kernel(4 + seed, seed), b = random_kernel(20 - seed, seed + 7);
            const auto ab = volconv::apply(build(basis, a, b.size() - 1), b);
            const auto ba = volconv::apply(build(basis, b, a.size() - 1), a);
            for (std::size_t k = 0; k < ab.size(); ++k)
                EXPECT_NEAR(ab[k], ba[k], 1e-13 * std::max(1.0, std::abs(ab[k]))) << basis.name() << " seed=" << seed;
        }
}

TEST(Properties, LinearityInKernel) {
    for (const auto& basis : finite_bases())
        for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
            const std::size_t M = 5 + seed, N = 25;
            const auto a1 = random_kernel(M, seed), a2 = random_kernel(M, seed + 500), b = random_kernel(N, seed + 900);
            std::vector<double> a12(M + 1);
            for (std::size_t i = 0; i <= M; ++i) a12[i] = a1[i] + a2[i];
            const auto c = volconv::apply(build(basis, a12, N), b);
            const auto c1 = volconv::apply(build(basis, a1, N), b), c2 = volconv::apply(build(basis, a2, N), b);
            for (std::size_t k = 0; k < c.size(); ++k)
                EXPECT_NEAR(c[k], c1[k] + c2[k], 1e-13 * std::max(1.0, std::abs(c[k]))) << basis.name() << " seed=" << seed;
        }
}

TEST(Properties, OracleEquivalence) {
    for (const auto& basis : finite_bases())
        for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
            const std::size_t M = 3 + seed % 10, N = 20 + 4 * seed;
            const auto a = random_kernel(M, seed);
            const auto rep = compare_entrywise(build(basis, a, N), conv_coeff_oracle_matrix(PolySeries(basis, a), N));
            EXPECT_LE(rep.max_abs, 1e-13) << basis.name() << " seed=" << seed;
        }
}

TEST(Properties, InstabilityWitnessEverySeed) {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        const auto a = random_kernel(10, seed);
        const auto naive = build_chebyshev_naive(a, 50);
        const auto stable = to_dense(build_chebyshev(a, 50));
        double above = 0.0;
        for (Eigen::Index n = 0; n < naive.cols(); ++n)
            for (Eigen::Index k = 0; k < n; ++k) above = std::max(above, std::abs(naive(k, n) - stable(k, n)));
        EXPECT_GE(above, 1e3) << "seed=" << seed;
    }
}

TEST(Properties, GegenbauerHalfLegendreJacobiZero) {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        const std::size_t M = seed, N = 30 + 5 * seed;
        const auto a = random_kernel(M, seed);
        const auto L = to_dense(build_legendre(a, N));
        EXPECT_LE((to_dense(build_gegenbauer(a, 0.5, N)) - L).cwiseAbs().maxCoeff(), 1e-14) << "seed=" << seed;
        EXPECT_LE((to_dense(build_jacobi(a, 0.0, 0.0, N)) - L).cwiseAbs().maxCoeff(), 1e-14) << "seed=" << seed;
    }
}

TEST(Properties, StructuralZeros) {
    for (const auto& basis : finite_bases())
        for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
            const std::size_t M = seed, N = 3 * seed + 10;
            const auto D = to_dense(build(basis, random_kernel(M, seed), N));
            for (std::size_t n = 0; n <= N; ++n)
                for (std::size_t k = 0; k < static_cast<std::size_t>(D.rows()); ++k) {
                    const bool below = k > M + n + 1;
                    const bool above = basis.kind == BasisKind::Legendre && n > k + M + 1;
                    if (below || above) {
                        EXPECT_EQ(D(k, n), 0.0) << basis.name() << " k=" << k << " n=" << n;
                    }
                }
        }
}
