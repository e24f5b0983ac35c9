#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "volconv/convmat.hpp"
#include "volconv/errors.hpp"
#include "volconv/laguerre.hpp"
#include "volconv/polyseries.hpp"

namespace volconv {

/// u(x) = s(x) + int_a^x f(a + x - t) u(t) dt on [a, b]; kernel f and rhs s
/// are series on the same interval in the same finite-interval basis.
struct VolterraProblem {
    PolySeries kernel;
    PolySeries rhs;

    void validate() const {
        if (!kernel.basis().finite_interval())
            throw UnsupportedBasis("VolterraProblem: finite-interval basis required");
        if (!(kernel.basis() == rhs.basis()))
            throw ContractError("VolterraProblem: kernel and rhs use different bases");
        if (!(kernel.domain() == rhs.domain()))
            throw ContractError("VolterraProblem: kernel and rhs live on different intervals");
    }
    [[nodiscard]] const Interval& domain() const { return kernel.domain(); }
};

/// Convolution matrix of f with the interval Jacobian (b - a)/2 folded in.
inline ConvMatrix conv_matrix(const PolySeries& f, std::size_t N) {
    if (!f.basis().finite_interval()) throw UnsupportedBasis("conv_matrix: finite-interval series required");
    return build(f.basis(), f.coeffs(), N).with_scale(0.5 * f.domain().length());
}

/// h(x) = int f(x - t) g(t) dt, t from c to x - a, for f on [a, b] and g on
/// [c, d] with equal lengths; h is returned on [a + c, b + c] with degree
/// deg f + deg g + 1. Two weighted Laguerre series convolve on [0, inf).
inline PolySeries convolve(const PolySeries& f, const PolySeries& g) {
    if (!(f.basis() == g.basis())) throw ContractError("convolve: series use different bases");
    if (!f.basis().finite_interval()) {
        const auto R = build_laguerre(f.coeffs(), g.degree(), f.basis().scale);
        return {f.basis(), half_line, apply_laguerre(R, g.coeffs())};
    }
    const double len = f.domain().length();
    if (std::abs(len - g.domain().length()) > 1e-12 * std::max(1.0, len))
        throw ContractError("convolve: interval lengths differ");
    const auto R = conv_matrix(f, g.degree());
    const double lo = f.domain().a + g.domain().a;
    return {f.basis(), Interval{lo, lo + len}, apply(R, g.coeffs())};
}

/// Top-left (N+1) x (N+1) block of the scaled matrix.
inline Eigen::MatrixXd truncate_square(const ConvMatrix& R, std::size_t N) {
    if (R.rows() < N + 1 || R.cols() < N + 1)
        throw DimensionError("truncate_square: matrix has fewer than N+1 rows or columns");
    Eigen::MatrixXd Q(N + 1, N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= N; ++k) Q(k, n) = R.stored(k, n) ? R.scale() * R(k, n) : 0.0;
    return Q;
}

/// Degree-N solution of the second-kind equation from (I - R^N) c^u = c^s.
inline PolySeries solve_second_kind(const VolterraProblem& p, std::size_t N) {
    p.validate();
    const auto R = conv_matrix(p.kernel, N);
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(N + 1, N + 1) - truncate_square(R, N);

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(N + 1);
    const auto s = p.rhs.coeffs();
    for (std::size_t k = 0; k < std::min(s.size(), N + 1); ++k) rhs(k) = s[k];

    const double amax = A.cwiseAbs().maxCoeff();
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const auto& U = lu.matrixLU();
    for (Eigen::Index i = 0; i < U.rows(); ++i)
        if (amax == 0.0 || !(std::abs(U(i, i)) >= 1e-14 * amax))
            throw SingularSystem("solve_second_kind: I - R is numerically singular");
    const Eigen::VectorXd c = lu.solve(rhs);
    return {p.rhs.basis(), p.domain(), std::vector<double>(c.data(), c.data() + c.size())};
}

}  // namespace volconv
