#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "volconv/errors.hpp"

namespace volconv {

enum class BasisKind { Chebyshev, Legendre, Gegenbauer, Jacobi, WeightedLaguerre };

/// Selects the orthogonal family a coefficient vector refers to.
///
/// Only the parameters of the selected family are meaningful: `lambda` for
/// Gegenbauer, `alpha`/`beta` for Jacobi and `scale` for weighted Laguerre,
/// where the basis functions are exp(-x/(2 scale)) L_n(x/scale).
struct BasisSpec {
    BasisKind kind = BasisKind::Chebyshev;
    double lambda = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double scale = 1.0;

    static BasisSpec chebyshev() { return {}; }
    static BasisSpec legendre() { return {BasisKind::Legendre}; }
    static BasisSpec gegenbauer(double lambda) {
        BasisSpec b{BasisKind::Gegenbauer, lambda};
        b.validate();
        return b;
    }
    static BasisSpec jacobi(double alpha, double beta) {
        BasisSpec b{BasisKind::Jacobi, 0.0, alpha, beta};
        b.validate();
        return b;
    }
    static BasisSpec weighted_laguerre(double scale = 1.0) {
        BasisSpec b{BasisKind::WeightedLaguerre, 0.0, 0.0, 0.0, scale};
        b.validate();
        return b;
    }

    [[nodiscard]] bool finite_interval() const { return kind != BasisKind::WeightedLaguerre; }

    void validate() const {
        switch (kind) {
        case BasisKind::Gegenbauer:
            if (!(lambda > -0.5) || lambda == 0.0)
                throw std::invalid_argument("Gegenbauer basis needs lambda > -1/2 and lambda != 0");
            break;
        case BasisKind::Jacobi:
            if (!(alpha > -1.0) || !(beta > -1.0))
                throw std::invalid_argument("Jacobi basis needs alpha, beta > -1");
            if (std::abs(alpha + beta + 1.0) <= 1e-12)
                throw DegenerateParameter(
                    "Jacobi basis with alpha + beta = -1 is not supported; use the Chebyshev or "
                    "Gegenbauer builders");
            break;
        case BasisKind::WeightedLaguerre:
            if (!(scale > 0.0) || !std::isfinite(scale))
                throw std::invalid_argument("weighted Laguerre scale must be positive");
            break;
        default:
            break;
        }
    }

    /// Shortest round-trip spelling of the parameters, e.g. "Jacobi(alpha=-0.4,beta=0.3)".
    [[nodiscard]] std::string name() const {
        auto num = [](double v) {
            char buf[32];
            const auto res = std::to_chars(buf, buf + sizeof buf, v);
            return std::string(buf, res.ptr);
        };
        switch (kind) {
        case BasisKind::Chebyshev: return "Chebyshev";
        case BasisKind::Legendre: return "Legendre";
        case BasisKind::Gegenbauer: return "Gegenbauer(lambda=" + num(lambda) + ")";
        case BasisKind::Jacobi: return "Jacobi(alpha=" + num(alpha) + ",beta=" + num(beta) + ")";
        case BasisKind::WeightedLaguerre: return "WeightedLaguerre(scale=" + num(scale) + ")";
        }
        return "";
    }

    friend bool operator==(const BasisSpec& l, const BasisSpec& r) {
        if (l.kind != r.kind) return false;
        switch (l.kind) {
        case BasisKind::Gegenbauer: return l.lambda == r.lambda;
        case BasisKind::Jacobi: return l.alpha == r.alpha && l.beta == r.beta;
        case BasisKind::WeightedLaguerre: return l.scale == r.scale;
        default: return true;
        }
    }
};

/// Coefficients of p_{k+1}(x) = (a x + b) p_k(x) - c p_{k-1}(x).
template <class Real>
struct ThreeTerm {
    Real a;
    Real b;
    Real c;
};

template <class Real>
ThreeTerm<Real> three_term(const BasisSpec& basis, std::size_t k) {
    const Real kk = static_cast<Real>(k);
    switch (basis.kind) {
    case BasisKind::Chebyshev:
        return {k == 0 ? Real(1) : Real(2), Real(0), Real(1)};
    case BasisKind::Legendre:
        return {(2 * kk + 1) / (kk + 1), Real(0), kk / (kk + 1)};
    case BasisKind::Gegenbauer: {
        const Real lam = static_cast<Real>(basis.lambda);
        return {2 * (kk + lam) / (kk + 1), Real(0), (kk + 2 * lam - 1) / (kk + 1)};
    }
    case BasisKind::Jacobi: {
        const Real al = static_cast<Real>(basis.alpha);
        const Real be = static_cast<Real>(basis.beta);
        if (k == 0) return {(al + be + 2) / 2, (al - be) / 2, Real(0)};
        const Real s = 2 * kk + al + be;
        const Real d = 2 * (kk + 1) * (kk + al + be + 1) * s;
        return {(s + 1) * (s + 2) * s / d, (s + 1) * (al * al - be * be) / d,
                2 * (kk + al) * (kk + be) * (s + 2) / d};
    }
    case BasisKind::WeightedLaguerre:
        return {Real(-1) / (kk + 1), (2 * kk + 1) / (kk + 1), kk / (kk + 1)};
    }
    return {};
}

/// p_0(x), ..., p_n(x) by forward recurrence (unweighted for Laguerre).
template <class Real>
std::vector<Real> basis_values(const BasisSpec& basis, std::size_t n, Real x) {
    std::vector<Real> p(n + 1);
    p[0] = Real(1);
    if (n == 0) return p;
    auto r = three_term<Real>(basis, 0);
    p[1] = r.a * x + r.b;
    for (std::size_t k = 1; k < n; ++k) {
        r = three_term<Real>(basis, k);
        p[k + 1] = (r.a * x + r.b) * p[k] - r.c * p[k - 1];
    }
    return p;
}

/// Clenshaw summation of sum_k c_k p_k(x) on the canonical variable.
template <class Real>
Real clenshaw(const BasisSpec& basis, std::span<const double> c, Real x) {
    Real b1 = 0, b2 = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
        const auto r = three_term<Real>(basis, k);
        const Real cnext = k + 1 < c.size() ? three_term<Real>(basis, k + 1).c : Real(0);
        const Real b0 = static_cast<Real>(c[k]) + (r.a * x + r.b) * b1 - cnext * b2;
        b2 = b1;
        b1 = b0;
    }
    return b1;
}

/// p_n(-1) for the finite-interval families, accumulated as a running product.
inline double basis_value_at_minus_one(const BasisSpec& basis, std::size_t n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    double ratio = 1.0;
    switch (basis.kind) {
    case BasisKind::Chebyshev:
    case BasisKind::Legendre:
        return sign;
    case BasisKind::Gegenbauer:
        // (2 lambda)_n / n!
        for (std::size_t j = 0; j < n; ++j) ratio *= (2.0 * basis.lambda + j) / (j + 1.0);
        return sign * ratio;
    case BasisKind::Jacobi:
        // (beta + 1)_n / n!
        for (std::size_t j = 0; j < n; ++j) ratio *= (basis.beta + 1.0 + j) / (j + 1.0);
        return sign * ratio;
    case BasisKind::WeightedLaguerre:
        break;
    }
    throw UnsupportedBasis("basis_value_at_minus_one: weighted Laguerre has no left endpoint value");
}

/// All of p_0(-1), ..., p_n(-1).
inline std::vector<double> basis_values_at_minus_one(const BasisSpec& basis, std::size_t n) {
    if (!basis.finite_interval())
        throw UnsupportedBasis("basis_values_at_minus_one: finite-interval basis required");
    std::vector<double> v(n + 1);
    double ratio = 1.0;
    for (std::size_t j = 0; j <= n; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        v[j] = sign * ratio;
        if (basis.kind == BasisKind::Gegenbauer)
            ratio *= (2.0 * basis.lambda + j) / (j + 1.0);
        else if (basis.kind == BasisKind::Jacobi)
            ratio *= (basis.beta + 1.0 + j) / (j + 1.0);
    }
    return v;
}

}  // namespace volconv
