#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "volconv/basis.hpp"
#include "volconv/errors.hpp"
#include "volconv/polyseries.hpp"

namespace volconv {

namespace detail {

/// Almost-banded storage: a dense block for rows 0..m and a band of m+1
/// diagonals on each side of the main diagonal for the remaining rows.
/// The dense block is row-major because the recast pass sweeps it by rows;
/// the band is column-major.
class BandStore {
public:
    BandStore() = default;
    BandStore(std::size_t m, std::size_t rows, std::size_t cols)
        : m_(m), rows_(rows), cols_(cols), width_(2 * m + 3), stride_(cols),
          top_((m + 1) * cols, 0.0), band_(width_ * cols, 0.0) {}

    [[nodiscard]] std::size_t m() const { return m_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] bool in_band(std::size_t k, std::size_t n) const {
        return k + m_ + 1 >= n && k <= n + m_ + 1;
    }
    [[nodiscard]] bool stored(std::size_t k, std::size_t n) const {
        return k < rows_ && n < cols_ && (k <= m_ || in_band(k, n));
    }

    [[nodiscard]] double get(std::size_t k, std::size_t n) const {
        if (k >= rows_ || n >= cols_) return 0.0;
        if (k <= m_) return top_[k * stride_ + n];
        if (!in_band(k, n)) return 0.0;
        return band_[n * width_ + (k + m_ + 1 - n)];
    }

    void set(std::size_t k, std::size_t n, double v) {
        if (!stored(k, n))
            throw std::out_of_range("BandStore::set: entry outside the almost-banded structure");
        if (k <= m_)
            top_[k * stride_ + n] = v;
        else
            band_[n * width_ + (k + m_ + 1 - n)] = v;
    }

    /// Keep columns 0..cols-1 and rows 0..rows-1. Storage is not released;
    /// the dropped padding columns are O(m) of the total.
    void shrink(std::size_t rows, std::size_t cols) {
        rows_ = std::min(rows_, rows);
        cols_ = std::min(cols_, cols);
    }

    /// Row range [first, last] holding stored entries of column n.
    [[nodiscard]] std::pair<std::size_t, std::size_t> band_rows(std::size_t n) const {
        const std::size_t first = std::max(m_ + 1, n > m_ + 1 ? n - m_ - 1 : std::size_t{0});
        const std::size_t last = std::min(rows_ - 1, n + m_ + 1);
        return {first, last};
    }

private:
    std::size_t m_ = 0;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t width_ = 0;
    std::size_t stride_ = 0;  // row stride of the dense block
    std::vector<double> top_;
    std::vector<double> band_;
};

}  // namespace detail

/// Convolution matrix for a kernel of degree M acting on series of degree <= N.
///
/// Entries are those of the canonical operator on [-1, 1]; `scale()` is the
/// interval Jacobian applied by `apply`, `to_dense` and `truncate_square`.
class ConvMatrix {
public:
    ConvMatrix(BasisSpec basis, std::size_t M, std::size_t N, detail::BandStore store, bool banded,
               double scale = 1.0)
        : basis_(basis), M_(M), N_(N), store_(std::move(store)), banded_(banded), scale_(scale) {}

    [[nodiscard]] const BasisSpec& basis() const { return basis_; }
    [[nodiscard]] std::size_t M() const { return M_; }
    [[nodiscard]] std::size_t N() const { return N_; }
    [[nodiscard]] std::size_t rows() const { return M_ + N_ + 2; }
    [[nodiscard]] std::size_t cols() const { return N_ + 1; }
    [[nodiscard]] double scale() const { return scale_; }
    /// True when the matrix is banded on both sides (Legendre).
    [[nodiscard]] bool banded() const { return banded_; }

    [[nodiscard]] ConvMatrix with_scale(double s) const {
        ConvMatrix out = *this;
        out.scale_ = s;
        return out;
    }

    /// Canonical (unscaled) entry; zero outside the stored structure.
    [[nodiscard]] double operator()(std::size_t k, std::size_t n) const { return store_.get(k, n); }

    [[nodiscard]] bool stored(std::size_t k, std::size_t n) const {
        if (banded_ && (k > n + M_ + 1 || n > k + M_ + 1)) return false;
        return store_.stored(k, n);
    }

    [[nodiscard]] const detail::BandStore& store() const { return store_; }

private:
    BasisSpec basis_;
    std::size_t M_;
    std::size_t N_;
    detail::BandStore store_;
    bool banded_;
    double scale_;
};

// ---------------------------------------------------------------------------
// Recurrence coefficients

/// S_n for the Gegenbauer column recurrence; (2 lambda - 1)_n / (n+1)! as a running product.
inline double gegenbauer_S(double lambda, std::size_t n) {
    double poch = 1.0;
    for (std::size_t i = 0; i < n; ++i) poch *= (2.0 * lambda - 1.0 + i) / (i + 1.0);
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return 2.0 * sign * (lambda + n) * poch / (n + 1.0);
}

/// Precomputed Jacobi integration coefficients.
///
/// A[j] (j >= 1), B[j], C[j], S[j] (j >= 0) as used by
///   int P_n = A_{n+1} P_{n+1} + B_n P_n + C_{n-1} P_{n-1}.
struct RecurrenceTables {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> A;
    std::vector<double> B;
    std::vector<double> C;
    std::vector<double> S;
};

inline RecurrenceTables jacobi_tables(double alpha, double beta, std::size_t nmax) {
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::invalid_argument("jacobi_tables: alpha, beta > -1 required");
    const double s = alpha + beta;
    if (std::abs(s + 1.0) <= 1e-12)
        throw DegenerateParameter("jacobi_tables: alpha + beta = -1 is degenerate");

    RecurrenceTables t{alpha, beta, {}, {}, {}, {}};
    t.A.assign(nmax + 2, 0.0);
    t.B.assign(nmax + 1, 0.0);
    t.C.assign(nmax + 1, 0.0);
    t.S.assign(nmax + 1, 0.0);
    for (std::size_t j = 1; j <= nmax + 1; ++j)
        t.A[j] = 2.0 * (s + j) / ((s + 2.0 * j - 1.0) * (s + 2.0 * j));
    for (std::size_t j = 0; j <= nmax; ++j) {
        const double d = (s + 2.0 * j) * (s + 2.0 * j + 2.0);
        t.B[j] = (j == 0 && std::abs(s) <= 1e-12) ? 0.0 : 2.0 * (alpha - beta) / d;
        t.C[j] = -2.0 * (alpha + j + 1.0) * (beta + j + 1.0) /
                 ((s + j + 1.0) * (s + 2.0 * j + 2.0) * (s + 2.0 * j + 3.0));
    }
    // (beta)_{n+1} / (n+1)!
    double poch = 1.0;
    for (std::size_t n = 0; n <= nmax; ++n) {
        poch *= (beta + n) / (n + 1.0);
        const double sign = (n % 2 == 0) ? -1.0 : 1.0;
        if (n == 0 && std::abs(s) <= 1e-12) {
            // Any B_0 is admissible since d/dx P_0 = 0; S_0 must match the chosen B_0.
            t.S[0] = -t.A[1] * (beta + 1.0) + t.B[0];
            continue;
        }
        if (std::abs(s + n) <= 1e-12)
            throw DegenerateParameter("jacobi_tables: alpha + beta + n vanishes");
        t.S[n] = 2.0 * sign * poch / (s + n);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Family-specific recurrences. Each rule set provides
//   column0(a, R)         zeroth column, rows 1..M+1 (row 0 by the boundary sum)
//   forward(R, k, n)      R_{k,n+1} for k >= 1
//   recast(R, k, n)       R_{k-1,n} for k >= 1 and n >= k-1
//   sym_step(k)           ratio rho(n,k)/rho(n,k-1) with R_{n,k} = rho(n,k) R_{k,n}
//   boundary              p_j(-1)

namespace detail {

struct ChebyshevRules {
    static constexpr bool row0_by_recast = false;
    std::vector<double> boundary;

    explicit ChebyshevRules(std::size_t rows) : boundary(basis_values_at_minus_one(BasisSpec::chebyshev(), rows)) {}

    static void column0(std::span<const double> a, BandStore& R) {
        const std::size_t M = a.size() - 1;
        auto at = [&](std::size_t j) { return j <= M ? a[j] : 0.0; };
        R.set(1, 0, at(0) - 0.5 * at(2));
        for (std::size_t k = 2; k <= M + 1; ++k) R.set(k, 0, (at(k - 1) - at(k + 1)) / (2.0 * k));
    }

    static double forward(const BandStore& R, std::size_t k, std::size_t n) {
        const double kk = static_cast<double>(k);
        const double prime = (k == 1) ? 2.0 : 1.0;
        if (n == 0)
            return -R.get(k, 0) + prime * R.get(k - 1, 0) / (2.0 * kk) - R.get(k + 1, 0) / (2.0 * kk);
        if (n == 1)
            return R.get(k, 0) + 2.0 * prime * R.get(k - 1, 1) / kk - 2.0 * R.get(k + 1, 1) / kk;
        const double nn = static_cast<double>(n);
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        return 2.0 * sgn / (nn - 1.0) * R.get(k, 0) + (nn + 1.0) / (nn - 1.0) * R.get(k, n - 1) +
               prime * (nn + 1.0) / kk * R.get(k - 1, n) - (nn + 1.0) / kk * R.get(k + 1, n);
    }

    static double recast(const BandStore& R, std::size_t k, std::size_t n) {
        const double kk = static_cast<double>(k);
        const double nn = static_cast<double>(n);
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        const double halve = (k == 1) ? 0.5 : 1.0;
        return halve * (-2.0 * kk * sgn / (nn * nn - 1.0) * R.get(k, 0) - kk / (nn - 1.0) * R.get(k, n - 1) +
                        kk / (nn + 1.0) * R.get(k, n + 1) + R.get(k + 1, n));
    }

    static double sym_step(std::size_t k) { return -static_cast<double>(k) / (k - 1.0); }
};

// The boundary weights (2 lambda)_j / j! grow like j^{2 lambda - 1}, so row 0
// comes from the recast recursion at k = 1 instead of the boundary sum.
struct GegenbauerRules {
    static constexpr bool row0_by_recast = true;
    double lambda;
    std::vector<double> S;
    std::vector<double> boundary;

    GegenbauerRules(double lam, std::size_t ncols, std::size_t rows)
        : lambda(lam), S(ncols + 1), boundary(basis_values_at_minus_one(BasisSpec::gegenbauer(lam), rows)) {
        double poch = 1.0;
        for (std::size_t n = 0; n <= ncols; ++n) {
            const double sign = (n % 2 == 0) ? -1.0 : 1.0;
            S[n] = 2.0 * sign * (lambda + n) * poch / (n + 1.0);
            poch *= (2.0 * lambda - 1.0 + n) / (n + 1.0);
        }
    }

    void column0(std::span<const double> a, BandStore& R) const {
        const std::size_t M = a.size() - 1;
        auto at = [&](std::size_t j) { return j <= M ? a[j] : 0.0; };
        for (std::size_t k = 1; k <= M + 1; ++k)
            R.set(k, 0, at(k - 1) / (2.0 * (k + lambda - 1.0)) - at(k + 1) / (2.0 * (k + lambda + 1.0)));
    }

    double forward(const BandStore& R, std::size_t k, std::size_t n) const {
        const double kl = k + lambda;
        const double nl = n + lambda;
        const double prev = n > 0 ? R.get(k, n - 1) : 0.0;
        return S[n] * R.get(k, 0) + prev + nl / (kl - 1.0) * R.get(k - 1, n) - nl / (kl + 1.0) * R.get(k + 1, n);
    }

    double recast(const BandStore& R, std::size_t k, std::size_t n) const {
        const double kl = k + lambda;
        const double nl = n + lambda;
        return (kl - 1.0) / nl * (-S[n] * R.get(k, 0) + R.get(k, n + 1) - R.get(k, n - 1)) +
               (kl - 1.0) / (kl + 1.0) * R.get(k + 1, n);
    }

    [[nodiscard]] double sym_step(std::size_t k) const { return -(k - 1.0 + lambda) / (k + lambda); }
};

/// Gegenbauer at lambda = 1/2, where S_n vanishes for n >= 1 and the column
/// recurrence has four terms. Column 1 keeps S_0 = -1.
struct LegendreRules {
    static constexpr bool row0_by_recast = false;
    std::vector<double> boundary;

    explicit LegendreRules(std::size_t rows) : boundary(basis_values_at_minus_one(BasisSpec::legendre(), rows)) {}

    static void column0(std::span<const double> a, BandStore& R) {
        const std::size_t M = a.size() - 1;
        auto at = [&](std::size_t j) { return j <= M ? a[j] : 0.0; };
        for (std::size_t k = 1; k <= M + 1; ++k)
            R.set(k, 0, at(k - 1) / (2.0 * k - 1.0) - at(k + 1) / (2.0 * k + 3.0));
    }

    static double forward(const BandStore& R, std::size_t k, std::size_t n) {
        const double kk = static_cast<double>(k);
        if (n == 0)
            return -R.get(k, 0) + R.get(k - 1, 0) / (2.0 * kk - 1.0) - R.get(k + 1, 0) / (2.0 * kk + 3.0);
        const double two_n1 = 2.0 * n + 1.0;
        return R.get(k, n - 1) + two_n1 / (2.0 * kk - 1.0) * R.get(k - 1, n) -
               two_n1 / (2.0 * kk + 3.0) * R.get(k + 1, n);
    }

    static double recast(const BandStore& R, std::size_t k, std::size_t n) {
        const double kk = static_cast<double>(k);
        return (2.0 * kk - 1.0) / (2.0 * n + 1.0) * (R.get(k, n + 1) - R.get(k, n - 1)) +
               (2.0 * kk - 1.0) / (2.0 * kk + 3.0) * R.get(k + 1, n);
    }

    static double sym_step(std::size_t k) { return -(2.0 * k - 1.0) / (2.0 * k + 1.0); }
};

struct JacobiRules {
    static constexpr bool row0_by_recast = true;
    RecurrenceTables t;
    std::vector<double> boundary;

    JacobiRules(double alpha, double beta, std::size_t rows)
        : t(jacobi_tables(alpha, beta, rows + 1)),
          boundary(basis_values_at_minus_one(BasisSpec::jacobi(alpha, beta), rows)) {}

    void column0(std::span<const double> a, BandStore& R) const {
        const std::size_t M = a.size() - 1;
        auto at = [&](std::size_t j) { return j <= M ? a[j] : 0.0; };
        for (std::size_t k = 1; k <= M + 1; ++k)
            R.set(k, 0, t.A[k] * at(k - 1) + t.B[k] * at(k) + t.C[k] * at(k + 1));
    }

    double forward(const BandStore& R, std::size_t k, std::size_t n) const {
        const double inv = 1.0 / t.A[n + 1];
        const double prev = n > 0 ? t.C[n - 1] * R.get(k, n - 1) : 0.0;
        return inv * ((t.B[k] - t.B[n]) * R.get(k, n) - prev + t.A[k] * R.get(k - 1, n) +
                      t.C[k] * R.get(k + 1, n) + t.S[n] * R.get(k, 0));
    }

    double recast(const BandStore& R, std::size_t k, std::size_t n) const {
        const double inv = 1.0 / t.A[k];
        return inv * ((t.B[n] - t.B[k]) * R.get(k, n) + t.C[n - 1] * R.get(k, n - 1) +
                      t.A[n + 1] * R.get(k, n + 1) - t.C[k] * R.get(k + 1, n) - t.S[n] * R.get(k, 0));
    }

    [[nodiscard]] double sym_step(std::size_t k) const {
        const double s = t.alpha + t.beta;
        return -(s + 2.0 * k - 1.0) / (s + 2.0 * k + 1.0) * (k + t.alpha) * (k + t.beta) / ((k + s) * (k + s));
    }
};

// Row 0 from h(-1) = 0: R_{0,n} = -sum_{j>=1} p_j(-1) R_{j,n}.
inline double boundary_row(const BandStore& R, std::span<const double> pm1, std::size_t n) {
    const std::size_t m = R.m();
    double acc = 0.0;
    for (std::size_t j = 1; j <= std::min(m, R.rows() - 1); ++j) acc += pm1[j] * R.get(j, n);
    const auto [first, last] = R.band_rows(n);
    for (std::size_t j = first; j <= last; ++j) acc += pm1[j] * R.get(j, n);
    return -acc;
}

/// Stable construction: zeroth column, forward recursion on and below the
/// diagonal, symmetry for the band above the diagonal, recast recursion
/// upward through the dense top rows, then row 0 from the boundary condition.
template <class Rules>
BandStore build_stable(const Rules& rules, std::span<const double> a, std::size_t N, bool banded) {
    const std::size_t M = a.size() - 1;
    const std::size_t W = N + M + 1;  // last padded column
    BandStore R(M, W + M + 2, W + 1);

    rules.column0(a, R);
    R.set(0, 0, boundary_row(R, rules.boundary, 0));

    // On and below the diagonal, left to right.
    for (std::size_t n = 0; n < W; ++n)
        for (std::size_t k = n + 1; k <= n + M + 2; ++k) R.set(k, n + 1, rules.forward(R, k, n));

    // Band above the diagonal in rows M+1.. by symmetry.
    for (std::size_t r = M + 1; r <= W; ++r) {
        double rho = 1.0;
        for (std::size_t c = r + 1; c <= std::min(W, r + M + 1); ++c) {
            rho *= rules.sym_step(c);
            R.set(r, c, rho * R.get(c, r));
        }
    }

    // Dense top rows, bottom-up. Row r reaches column W - (M + 1 - r).
    for (std::size_t r = M; r >= 1; --r) {
        std::size_t last = W - (M + 1 - r);
        if (banded) last = std::min(last, r + M + 1);
        for (std::size_t n = r + 1; n <= last; ++n) R.set(r, n, rules.recast(R, r + 1, n));
    }

    const std::size_t row0_last = banded ? std::min(N, M + 1) : N;
    for (std::size_t n = 1; n <= row0_last; ++n)
        R.set(0, n, Rules::row0_by_recast ? rules.recast(R, 1, n) : boundary_row(R, rules.boundary, n));

    R.shrink(M + N + 2, N + 1);
    return R;
}

inline void check_kernel(std::span<const double> a, const char* who) {
    if (a.empty()) throw std::invalid_argument(std::string(who) + ": empty kernel coefficient vector");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public builders

/// Zeroth column of the Chebyshev convolution matrix (length M+2).
inline std::vector<double> cheb_column0(std::span<const double> a) {
    detail::check_kernel(a, "cheb_column0");
    const std::size_t M = a.size() - 1;
    detail::BandStore R(M, M + 2, 1);
    detail::ChebyshevRules::column0(a, R);
    const auto pm1 = basis_values_at_minus_one(BasisSpec::chebyshev(), M + 1);
    R.set(0, 0, detail::boundary_row(R, pm1, 0));
    std::vector<double> out(M + 2);
    for (std::size_t k = 0; k <= M + 1; ++k) out[k] = R.get(k, 0);
    return out;
}

inline ConvMatrix build_chebyshev(std::span<const double> a, std::size_t N) {
    detail::check_kernel(a, "build_chebyshev");
    const std::size_t M = a.size() - 1;
    detail::ChebyshevRules rules(2 * M + N + 3);
    return {BasisSpec::chebyshev(), M, N, detail::build_stable(rules, a, N, false), false};
}

inline ConvMatrix build_legendre(std::span<const double> a, std::size_t N) {
    detail::check_kernel(a, "build_legendre");
    const std::size_t M = a.size() - 1;
    detail::LegendreRules rules(2 * M + N + 3);
    return {BasisSpec::legendre(), M, N, detail::build_stable(rules, a, N, true), true};
}

inline ConvMatrix build_gegenbauer(std::span<const double> a, double lambda, std::size_t N) {
    detail::check_kernel(a, "build_gegenbauer");
    const auto basis = BasisSpec::gegenbauer(lambda);
    const std::size_t M = a.size() - 1;
    detail::GegenbauerRules rules(lambda, N + M + 2, 2 * M + N + 3);
    return {basis, M, N, detail::build_stable(rules, a, N, false), false};
}

inline ConvMatrix build_jacobi(std::span<const double> a, double alpha, double beta, std::size_t N) {
    detail::check_kernel(a, "build_jacobi");
    const auto basis = BasisSpec::jacobi(alpha, beta);
    const std::size_t M = a.size() - 1;
    detail::JacobiRules rules(alpha, beta, 2 * M + N + 3);
    return {basis, M, N, detail::build_stable(rules, a, N, false), false};
}

/// Dispatch on the basis family (finite-interval families only).
inline ConvMatrix build(const BasisSpec& basis, std::span<const double> a, std::size_t N) {
    switch (basis.kind) {
    case BasisKind::Chebyshev: return build_chebyshev(a, N);
    case BasisKind::Legendre: return build_legendre(a, N);
    case BasisKind::Gegenbauer: return build_gegenbauer(a, basis.lambda, N);
    case BasisKind::Jacobi: return build_jacobi(a, basis.alpha, basis.beta, N);
    case BasisKind::WeightedLaguerre: break;
    }
    throw UnsupportedBasis("build: use build_laguerre for weighted Laguerre kernels");
}

/// rho with R_{n,k} = rho R_{k,n} inside the symmetric submatrix.
inline double symmetry_ratio(const BasisSpec& basis, std::size_t n, std::size_t k) {
    const double sign = ((n + k) % 2 == 0) ? 1.0 : -1.0;
    switch (basis.kind) {
    case BasisKind::Chebyshev:
        if (n == 0 || k == 0) throw std::invalid_argument("symmetry_ratio: Chebyshev needs n, k >= 1");
        return sign * static_cast<double>(k) / static_cast<double>(n);
    case BasisKind::Legendre:
        return sign * (n + 0.5) / (k + 0.5);
    case BasisKind::Gegenbauer:
        return sign * (n + basis.lambda) / (k + basis.lambda);
    case BasisKind::Jacobi: {
        if (n == k) return 1.0;
        const double s = basis.alpha + basis.beta;
        const std::size_t lo = std::min(n, k), hi = std::max(n, k);
        double rho = (s + 2.0 * lo + 1.0) / (s + 2.0 * hi + 1.0);
        for (std::size_t j = lo; j < hi; ++j)
            rho *= (j + basis.alpha + 1.0) / (j + s + 1.0) * ((j + basis.beta + 1.0) / (j + s + 1.0));
        return sign * (n < k ? rho : 1.0 / rho);
    }
    case BasisKind::WeightedLaguerre: break;
    }
    throw UnsupportedBasis("symmetry_ratio: finite-interval basis required");
}

/// Column-by-column forward recursion with no symmetry phase. Numerically
/// unstable above the diagonal; kept for error-growth studies.
inline Eigen::MatrixXd build_chebyshev_naive(std::span<const double> a, std::size_t N) {
    detail::check_kernel(a, "build_chebyshev_naive");
    const std::size_t M = a.size() - 1;
    const std::size_t rows = M + N + 2;
    // A band as wide as the matrix holds every entry.
    detail::BandStore R(rows, rows + 1, N + 1);
    detail::ChebyshevRules::column0(a, R);
    const auto pm1 = basis_values_at_minus_one(BasisSpec::chebyshev(), rows + 1);
    auto row0 = [&](std::size_t n) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= M + n + 1; ++j) acc += pm1[j] * R.get(j, n);
        return -acc;
    };
    R.set(0, 0, row0(0));
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t k = 1; k <= M + n + 2; ++k) R.set(k, n + 1, detail::ChebyshevRules::forward(R, k, n));
        R.set(0, n + 1, row0(n + 1));
    }
    Eigen::MatrixXd D(rows, N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k < rows; ++k) D(k, n) = R.get(k, n);
    return D;
}

/// c = scale * R b. Shorter b is zero-padded.
inline std::vector<double> apply(const ConvMatrix& R, std::span<const double> b) {
    if (b.size() > R.cols())
        throw DimensionError("apply: coefficient vector longer than N+1");
    const auto& S = R.store();
    std::vector<double> c(R.rows(), 0.0);
    for (std::size_t n = 0; n < b.size(); ++n) {
        const double bn = b[n];
        if (bn == 0.0) continue;
        for (std::size_t k = 0; k <= std::min(R.M(), R.rows() - 1); ++k) c[k] += S.get(k, n) * bn;
        const auto [first, last] = S.band_rows(n);
        for (std::size_t k = first; k <= last; ++k) c[k] += S.get(k, n) * bn;
    }
    for (double& v : c) v *= R.scale();
    return c;
}

/// Dense (M+N+2) x (N+1) copy including the scale factor.
inline Eigen::MatrixXd to_dense(const ConvMatrix& R) {
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(R.rows(), R.cols());
    const auto& S = R.store();
    for (std::size_t n = 0; n < R.cols(); ++n) {
        for (std::size_t k = 0; k <= std::min(R.M(), R.rows() - 1); ++k) D(k, n) = S.get(k, n);
        const auto [first, last] = S.band_rows(n);
        for (std::size_t k = first; k <= last; ++k) D(k, n) = S.get(k, n);
    }
    return R.scale() * D;
}

}  // namespace volconv
