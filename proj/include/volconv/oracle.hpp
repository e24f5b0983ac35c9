#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "volconv/basis.hpp"
#include "volconv/convmat.hpp"
#include "volconv/errors.hpp"
#include "volconv/polyseries.hpp"
#include "volconv/quadrature.hpp"
#include "volconv/random.hpp"

// Ground truth for convolution matrices by exact-degree Gauss quadrature in
// extended precision. Nothing here uses the column recurrences.

namespace volconv {

/// Cap on M + n for the coefficient oracle.
inline constexpr std::size_t coefficient_oracle_limit = 600;

namespace detail {

using Ext = long double;

inline std::pair<Ext, Ext> weight_exponents(const BasisSpec& basis) {
    switch (basis.kind) {
    case BasisKind::Chebyshev: return {-0.5L, -0.5L};
    case BasisKind::Legendre: return {0.0L, 0.0L};
    case BasisKind::Gegenbauer: return {basis.lambda - 0.5L, basis.lambda - 0.5L};
    case BasisKind::Jacobi: return {static_cast<Ext>(basis.alpha), static_cast<Ext>(basis.beta)};
    case BasisKind::WeightedLaguerre: break;
    }
    throw UnsupportedBasis("oracle: finite-interval basis required");
}

inline std::size_t inner_nodes(std::size_t degree) { return (degree + 1) / 2 + 2; }

// Values of the columns n = 0..N of the continuous operator at the points ys:
// H(j, n) = int_{-1}^{y_j} f(y_j - 1 - t) p_n(t) dt.
inline Eigen::Matrix<Ext, Eigen::Dynamic, Eigen::Dynamic> column_values(const BasisSpec& basis,
                                                                         std::span<const double> f,
                                                                         std::size_t N,
                                                                         std::span<const Ext> ys) {
    const std::size_t M = f.size() - 1;
    const auto gl = gauss_legendre_nodes<Ext>(inner_nodes(M + N));
    Eigen::Matrix<Ext, Eigen::Dynamic, Eigen::Dynamic> H =
        Eigen::Matrix<Ext, Eigen::Dynamic, Eigen::Dynamic>::Zero(ys.size(), N + 1);
    for (std::size_t j = 0; j < ys.size(); ++j) {
        const Ext y = ys[j];
        const Ext half = (y + 1) / 2;
        for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
            const Ext t = -1 + half * (gl.nodes[q] + 1);
            const Ext w = half * gl.weights[q] * clenshaw<Ext>(basis, f, y - 1 - t);
            const auto p = basis_values<Ext>(basis, N, t);
            for (std::size_t n = 0; n <= N; ++n) H(j, n) += w * p[n];
        }
    }
    return H;
}

}  // namespace detail

/// Columns 0..N of the convolution matrix of kernel `f` (canonical interval),
/// as a dense (M+N+2) x (N+1) matrix.
inline Eigen::MatrixXd conv_coeff_oracle_matrix(const PolySeries& f, std::size_t N) {
    using detail::Ext;
    const BasisSpec& basis = f.basis();
    const std::size_t M = f.degree();
    if (M + N > coefficient_oracle_limit)
        throw OversizeError("conv_coeff_oracle: M + n exceeds the coefficient oracle limit; sample pointwise instead");
    const std::size_t L = M + N + 1;
    const auto [wa, wb] = detail::weight_exponents(basis);
    const auto proj = gauss_jacobi_nodes<Ext>(wa, wb, L + 1);

    const auto H = detail::column_values(basis, f.coeffs(), N, proj.nodes);

    Eigen::Matrix<Ext, Eigen::Dynamic, Eigen::Dynamic> P(proj.nodes.size(), L + 1);
    for (std::size_t j = 0; j < proj.nodes.size(); ++j) {
        const auto p = basis_values<Ext>(basis, L, proj.nodes[j]);
        for (std::size_t k = 0; k <= L; ++k) P(j, k) = p[k];
    }
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(L + 1, N + 1);
    for (std::size_t k = 0; k <= L; ++k) {
        Ext norm = 0;
        for (std::size_t j = 0; j < proj.nodes.size(); ++j) norm += proj.weights[j] * P(j, k) * P(j, k);
        for (std::size_t n = 0; n <= N; ++n) {
            if (k > M + n + 1) continue;
            Ext acc = 0;
            for (std::size_t j = 0; j < proj.nodes.size(); ++j) acc += proj.weights[j] * H(j, n) * P(j, k);
            R(k, n) = static_cast<double>(acc / norm);
        }
    }
    return R;
}

/// Column n of the convolution matrix (length M+n+2).
inline std::vector<double> conv_coeff_oracle(const PolySeries& f, std::size_t n) {
    const auto R = conv_coeff_oracle_matrix(f, n);
    std::vector<double> col(f.degree() + n + 2);
    for (std::size_t k = 0; k < col.size(); ++k) col[k] = R(k, n);
    return col;
}

/// h(x) = int f(x - t) g(t) dt over the left-sided Volterra range, by
/// exact-degree Gauss-Legendre quadrature. f on [a, b], g on [c, d] with
/// b - a = d - c; x ranges over [a + c, b + c].
inline std::vector<double> conv_point_oracle(const PolySeries& f, const PolySeries& g, std::span<const double> points) {
    using detail::Ext;
    if (!f.basis().finite_interval() || !g.basis().finite_interval())
        throw UnsupportedBasis("conv_point_oracle: finite-interval series required");
    const double len = f.domain().length();
    if (std::abs(len - g.domain().length()) > 1e-12 * std::max(1.0, len))
        throw ContractError("conv_point_oracle: interval lengths differ");
    const Ext a = f.domain().a, c = g.domain().a, half_len = len / 2.0L;
    const auto gl = gauss_legendre_nodes<Ext>(detail::inner_nodes(f.degree() + g.degree()));

    std::vector<double> out;
    out.reserve(points.size());
    for (double xd : points) {
        const Ext x = xd;
        if (x < a + c - 1e-12L * (1 + std::abs(a + c)) || x > a + c + len + 1e-12L * (1 + std::abs(a + c + len)))
            throw std::domain_error("conv_point_oracle: point outside the convolution domain");
        // t from c to x - a
        const Ext upper = std::clamp<Ext>(x - a, c, c + len);
        const Ext half = (upper - c) / 2;
        Ext acc = 0;
        for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
            const Ext t = c + half * (gl.nodes[q] + 1);
            const Ext yf = std::clamp<Ext>((x - t - a) / half_len - 1, -1, 1);
            const Ext yg = std::clamp<Ext>((t - c) / half_len - 1, -1, 1);
            acc += gl.weights[q] * clenshaw<Ext>(f.basis(), f.coeffs(), yf) * clenshaw<Ext>(g.basis(), g.coeffs(), yg);
        }
        out.push_back(static_cast<double>(half * acc));
    }
    return out;
}

/// Absolute errors of a convolution matrix against a reference.
///
/// Entrywise reports hold a (rows x cols) grid; pointwise reports hold one
/// error per (column, y) sample.
struct ErrorReport {
    std::string basis;
    std::size_t M = 0;
    std::size_t N = 0;
    std::uint64_t seed = 0;
    bool pointwise = false;
    Eigen::MatrixXd grid;
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> mask;
    std::vector<double> sample_y;
    std::vector<std::size_t> sample_n;
    std::vector<double> sample_error;
    double max_abs = 0.0;

    /// Largest error strictly above the main diagonal (entrywise reports).
    [[nodiscard]] double max_above_diagonal() const {
        double m = 0.0;
        for (Eigen::Index n = 0; n < grid.cols(); ++n)
            for (Eigen::Index k = 0; k < std::min<Eigen::Index>(n, grid.rows()); ++k)
                if (mask(k, n)) m = std::max(m, grid(k, n));
        return m;
    }
};

/// Entrywise comparison over the entries selected by `mask`.
inline ErrorReport compare_entrywise(const Eigen::MatrixXd& built, const Eigen::MatrixXd& oracle,
                                     const Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>& mask) {
    if (built.rows() != oracle.rows() || built.cols() != oracle.cols() || mask.rows() != built.rows() ||
        mask.cols() != built.cols())
        throw DimensionError("compare_entrywise: shape mismatch");
    ErrorReport rep;
    rep.grid = Eigen::MatrixXd::Zero(built.rows(), built.cols());
    rep.mask = mask;
    for (Eigen::Index n = 0; n < built.cols(); ++n)
        for (Eigen::Index k = 0; k < built.rows(); ++k) {
            if (!mask(k, n)) continue;
            const double e = std::abs(built(k, n) - oracle(k, n));
            rep.grid(k, n) = e;
            // NaN from an overflowing naive build counts as infinite error.
            rep.max_abs = std::isnan(e) ? std::numeric_limits<double>::infinity() : std::max(rep.max_abs, e);
        }
    return rep;
}

/// Compares every stored entry of `built` with the oracle columns.
inline ErrorReport compare_entrywise(const ConvMatrix& built, const Eigen::MatrixXd& oracle) {
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> mask(built.rows(), built.cols());
    for (std::size_t n = 0; n < built.cols(); ++n)
        for (std::size_t k = 0; k < built.rows(); ++k) mask(k, n) = built.stored(k, n);
    auto rep = compare_entrywise(to_dense(built.with_scale(1.0)), oracle, mask);
    rep.basis = built.basis().name();
    rep.M = built.M();
    rep.N = built.N();
    return rep;
}

/// Dense comparison over all entries k <= M + n + 1 (for the naive builder).
inline ErrorReport compare_entrywise_dense(const Eigen::MatrixXd& built, const Eigen::MatrixXd& oracle, std::size_t M) {
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> mask(built.rows(), built.cols());
    for (Eigen::Index n = 0; n < built.cols(); ++n)
        for (Eigen::Index k = 0; k < built.rows(); ++k) mask(k, n) = static_cast<std::size_t>(k) <= M + n + 1;
    auto rep = compare_entrywise(built, oracle, mask);
    rep.M = M;
    rep.N = static_cast<std::size_t>(built.cols()) - 1;
    return rep;
}

/// Pointwise check of the column functions of `built` at random locations.
///
/// Draws `samples` (column, y) pairs grouped by y and compares
/// sum_k R_{k,n} p_k(y) with the quadrature value of (f * p_n) at y.
/// Works at any size; the cost is O(groups * (M + N)^2).
inline ErrorReport sampled_column_check(const ConvMatrix& built, const PolySeries& f, std::size_t samples,
                                        std::uint64_t seed) {
    using detail::Ext;
    const BasisSpec& basis = built.basis();
    const std::size_t M = built.M(), N = built.N();
    if (f.degree() != M) throw DimensionError("sampled_column_check: kernel degree differs from the matrix");
    SplitMix64 rng(seed);
    const std::size_t per_group = 25;
    const std::size_t groups = (samples + per_group - 1) / per_group;

    ErrorReport rep;
    rep.basis = basis.name();
    rep.M = M;
    rep.N = N;
    rep.seed = seed;
    rep.pointwise = true;
    const auto& S = built.store();
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t count = std::min(per_group, samples - g * per_group);
        const Ext y = static_cast<Ext>(rng.uniform(-1.0, 1.0));
        std::vector<std::size_t> cols(count);
        for (auto& n : cols) n = static_cast<std::size_t>(rng.next() % (N + 1));
        const std::size_t nmax = *std::max_element(cols.begin(), cols.end());

        const Ext ys[1] = {y};
        const auto H = detail::column_values(basis, f.coeffs(), nmax, ys);
        const auto p = basis_values<Ext>(basis, M + N + 1, y);
        for (std::size_t n : cols) {
            Ext value = 0;
            for (std::size_t k = 0; k <= std::min(M, built.rows() - 1); ++k) value += static_cast<Ext>(S.get(k, n)) * p[k];
            const auto [first, last] = S.band_rows(n);
            for (std::size_t k = first; k <= last; ++k) value += static_cast<Ext>(S.get(k, n)) * p[k];
            const double err = static_cast<double>(std::abs(value - H(0, n)));
            rep.sample_y.push_back(static_cast<double>(y));
            rep.sample_n.push_back(n);
            rep.sample_error.push_back(err);
            rep.max_abs = std::max(rep.max_abs, err);
        }
    }
    return rep;
}

/// CSV: '#' metadata lines, "k,n,abs_error" (or "y,n,abs_error") rows, and a
/// final "max_abs,<value>" line.
inline void write_error_report_csv(std::ostream& os, const ErrorReport& rep) {
    const auto old_prec = os.precision(17);
    os << "# basis=" << rep.basis << "\n# M=" << rep.M << "\n# N=" << rep.N << "\n# seed=" << rep.seed << "\n";
    if (rep.pointwise) {
        os << "y,n,abs_error\n";
        for (std::size_t i = 0; i < rep.sample_error.size(); ++i)
            os << rep.sample_y[i] << ',' << rep.sample_n[i] << ',' << rep.sample_error[i] << '\n';
    } else {
        os << "k,n,abs_error\n";
        for (Eigen::Index n = 0; n < rep.grid.cols(); ++n)
            for (Eigen::Index k = 0; k < rep.grid.rows(); ++k)
                if (rep.mask(k, n)) os << k << ',' << n << ',' << rep.grid(k, n) << '\n';
    }
    os << "max_abs," << rep.max_abs << '\n';
    os.precision(old_prec);
}

}  // namespace volconv
