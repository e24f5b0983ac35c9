#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "volconv/errors.hpp"

namespace volconv {

template <class Real>
struct QuadratureRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

namespace detail {

// P_n^{(alpha,beta)}(x) and P_{n-1}^{(alpha,beta)}(x) by the standard recurrence.
template <class Real>
std::pair<Real, Real> jacobi_pair(std::size_t n, Real alpha, Real beta, Real x) {
    Real p0 = 1;
    Real p1 = ((alpha + beta + 2) * x + (alpha - beta)) / 2;
    if (n == 0) return {p0, Real(0)};
    for (std::size_t k = 1; k < n; ++k) {
        const Real kk = static_cast<Real>(k);
        const Real s = 2 * kk + alpha + beta;
        const Real d = 2 * (kk + 1) * (kk + alpha + beta + 1) * s;
        const Real p2 = ((s + 1) * ((s + 2) * s * x + alpha * alpha - beta * beta) * p1 -
                         2 * (kk + alpha) * (kk + beta) * (s + 2) * p0) /
                        d;
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

}  // namespace detail

/// n-point Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta.
///
/// Roots by Newton iteration on the recurrence, deflated against the roots
/// already found; nodes are returned in increasing order.
template <class Real = long double>
QuadratureRule<Real> gauss_jacobi_nodes(Real alpha, Real beta, std::size_t n) {
    if (!(alpha > -1) || !(beta > -1)) throw std::invalid_argument("gauss_jacobi_nodes: alpha, beta > -1 required");
    if (n == 0) throw std::invalid_argument("gauss_jacobi_nodes: n >= 1 required");

    const Real pi = std::numbers::pi_v<Real>;
    const Real nn = static_cast<Real>(n);
    const Real ab = alpha + beta;
    const Real tol = 64 * std::numeric_limits<Real>::epsilon();

    auto derivative = [&](Real x, Real pn, Real pnm1) {
        // (2n+a+b)(1-x^2) P_n' = n[(a-b) - (2n+a+b)x] P_n + 2(n+a)(n+b) P_{n-1}
        const Real s = 2 * nn + ab;
        return (nn * ((alpha - beta) - s * x) * pn + 2 * (nn + alpha) * (nn + beta) * pnm1) / (s * (1 - x * x));
    };

    std::vector<Real> roots;
    roots.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Largest root first; asymptotic angle guess.
        Real x = std::cos(pi * (static_cast<Real>(i) + 0.75L + alpha / 2) / (nn + 0.5L + ab / 2));
        if (i > 0 && x >= roots.back()) x = (roots.back() + Real(-1)) / 2 + (roots.back() - Real(-1)) / 4;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            const auto [pn, pnm1] = detail::jacobi_pair(n, alpha, beta, x);
            const Real dp = derivative(x, pn, pnm1);
            Real defl = 0;
            for (Real r : roots) defl += 1 / (x - r);
            const Real step = pn / (dp - pn * defl);
            Real next = x - step;
            if (next >= 1) next = (x + 1) / 2;
            if (next <= -1) next = (x - 1) / 2;
            const Real delta = std::abs(next - x);
            x = next;
            if (delta <= tol * std::max(Real(1e-3), std::abs(x))) {
                converged = true;
                break;
            }
        }
        if (!converged) throw NumericalError("gauss_jacobi_nodes: Newton iteration did not converge");
        roots.push_back(x);
    }

    QuadratureRule<Real> rule;
    rule.nodes.assign(roots.rbegin(), roots.rend());
    for (std::size_t i = 1; i < n; ++i)
        if (!(rule.nodes[i] > rule.nodes[i - 1])) throw NumericalError("gauss_jacobi_nodes: roots not distinct");

    // w_i = 2^{a+b+1} Gamma(n+a+1) Gamma(n+b+1) / (Gamma(n+a+b+1) n!) / ((1-x^2) P_n'(x)^2)
    const Real log_c = (ab + 1) * std::log(Real(2)) + std::lgamma(nn + alpha + 1) + std::lgamma(nn + beta + 1) -
                       std::lgamma(nn + ab + 1) - std::lgamma(nn + 1);
    const Real c = std::exp(log_c);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Real x = rule.nodes[i];
        const auto [pn, pnm1] = detail::jacobi_pair(n, alpha, beta, x);
        const Real dp = derivative(x, pn, pnm1);
        rule.weights[i] = c / ((1 - x * x) * dp * dp);
    }
    return rule;
}

template <class Real = long double>
QuadratureRule<Real> gauss_legendre_nodes(std::size_t n) {
    return gauss_jacobi_nodes<Real>(Real(0), Real(0), n);
}

/// n-point Gauss-Laguerre rule for the weight exp(-x) on [0, inf).
///
/// Newton on the recurrence, each root started from an extrapolation of the
/// previous two; nodes come out in increasing order.
template <class Real = long double>
QuadratureRule<Real> gauss_laguerre_nodes(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_laguerre_nodes: n >= 1 required");
    const Real nn = static_cast<Real>(n);
    const Real tol = 64 * std::numeric_limits<Real>::epsilon();

    auto eval = [&](Real x) {
        Real p0 = 1, p1 = 1 - x;
        if (n == 1) return std::pair<Real, Real>{p1, p0};
        for (std::size_t k = 1; k < n; ++k) {
            const Real kk = static_cast<Real>(k);
            const Real p2 = ((2 * kk + 1 - x) * p1 - kk * p0) / (kk + 1);
            p0 = p1;
            p1 = p2;
        }
        return std::pair<Real, Real>{p1, p0};
    };

    std::vector<Real> roots;
    roots.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Real x;
        if (i == 0)
            x = 3 / (1 + Real(2.4) * nn);
        else if (i == 1)
            x = roots[0] + 15 / (1 + Real(2.5) * nn);
        else {
            const Real ai = static_cast<Real>(i - 1);
            x = roots[i - 1] + (1 + Real(2.55) * ai) / (Real(1.9) * ai) * (roots[i - 1] - roots[i - 2]);
        }
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            const auto [pn, pnm1] = eval(x);
            const Real dp = nn * (pn - pnm1) / x;
            Real next = x - pn / dp;
            if (next <= 0) next = x / 2;
            const Real delta = std::abs(next - x);
            x = next;
            if (delta <= tol * std::max(Real(1), x)) {
                converged = true;
                break;
            }
        }
        if (!converged) throw NumericalError("gauss_laguerre_nodes: Newton iteration did not converge");
        roots.push_back(x);
    }

    for (std::size_t i = 1; i < n; ++i)
        if (!(roots[i] > roots[i - 1])) throw NumericalError("gauss_laguerre_nodes: roots not distinct");

    QuadratureRule<Real> rule;
    rule.nodes = roots;
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Real x = roots[i];
        const auto [pn, pnm1] = eval(x);
        const Real dp = nn * (pn - pnm1) / x;
        // w = 1 / (x L_n'(x)^2)
        rule.weights[i] = 1 / (x * dp * dp);
    }
    return rule;
}

}  // namespace volconv
