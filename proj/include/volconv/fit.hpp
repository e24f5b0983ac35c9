#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "volconv/errors.hpp"
#include "volconv/fft.hpp"
#include "volconv/polyseries.hpp"
#include "volconv/quadrature.hpp"

namespace volconv {

/// When to stop refining a Chebyshev fit.
struct ChopRule {
    double rel_tol = 1e-15;
    std::size_t max_degree = 65536;

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw std::invalid_argument("ChopRule: 0 < rel_tol < 1 required");
        if (max_degree < 1) throw std::invalid_argument("ChopRule: max_degree >= 1 required");
    }
};

/// Thrown when a fit does not settle by max_degree; carries the last series.
class NotResolved : public NumericalError {
public:
    NotResolved(const std::string& what, PolySeries best) : NumericalError(what), best_(std::move(best)) {}
    [[nodiscard]] const PolySeries& best() const { return best_; }

private:
    PolySeries best_;
};

namespace detail {

// f at the n+1 second-kind Chebyshev points mapped to [a, b], x_0 = b.
inline std::vector<double> chebyshev_samples(const std::function<double(double)>& f, Interval dom, std::size_t n) {
    std::vector<double> v(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const double y = n == 0 ? 1.0 : std::cos(std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
        const double x = j == 0 ? dom.b : (j == n ? dom.a : dom.a + 0.5 * (y + 1.0) * (dom.b - dom.a));
        v[j] = f(x);
        if (!std::isfinite(v[j])) throw std::domain_error("fit_chebyshev: function is not finite at a sample point");
    }
    return v;
}

}  // namespace detail

/// Chebyshev coefficients of the interpolant through values at the points
/// cos(pi j / n), j = 0..n, via a type-I DCT.
inline std::vector<double> chebyshev_coeffs_from_values(std::span<const double> v) {
    const std::size_t n = v.size() - 1;
    if (n == 0) return {v.begin(), v.end()};
    auto c = detail::dct1(v);
    for (auto& ck : c) ck /= static_cast<double>(n);
    c.front() *= 0.5;
    c.back() *= 0.5;
    return c;
}

/// Adaptive Chebyshev fit on [a, b].
///
/// Sample counts double from 17 points. A fit is accepted once the
/// coefficients above some degree d all sit below
/// max(rel_tol * max|c|, 8 eps max|f|) and at least max(4, n/4) such trailing
/// coefficients exist; the result is chopped to degree d.
inline PolySeries fit_chebyshev(const std::function<double(double)>& f, Interval domain, ChopRule rule = {}) {
    rule.validate();
    if (!(domain.a < domain.b) || !std::isfinite(domain.a) || !std::isfinite(domain.b))
        throw std::invalid_argument("fit_chebyshev: domain must satisfy a < b");
    const double eps = std::numeric_limits<double>::epsilon();
    std::size_t n = std::min<std::size_t>(16, rule.max_degree);
    for (;;) {
        const auto v = detail::chebyshev_samples(f, domain, n);
        auto c = chebyshev_coeffs_from_values(v);
        double cmax = 0.0;
        for (double ck : c) cmax = std::max(cmax, std::abs(ck));
        if (cmax == 0.0) return {BasisSpec::chebyshev(), domain, {0.0}};
        double fmax = 0.0;
        for (double x : v) fmax = std::max(fmax, std::abs(x));
        const double thr = std::max(rule.rel_tol * cmax, 8.0 * eps * fmax);
        std::size_t d = 0;
        for (std::size_t k = c.size(); k-- > 0;)
            if (std::abs(c[k]) > thr) {
                d = k;
                break;
            }
        const std::size_t tail = std::max<std::size_t>(4, n / 4);
        if (d + tail <= n) {
            c.resize(d + 1);
            return {BasisSpec::chebyshev(), domain, std::move(c)};
        }
        if (2 * n > rule.max_degree)
            throw NotResolved("fit_chebyshev: coefficients did not decay by max_degree",
                              PolySeries(BasisSpec::chebyshev(), domain, std::move(c)));
        n *= 2;
    }
}

/// Weighted Laguerre coefficients of a decaying function g on [0, inf):
/// g(x) ~ exp(-x/(2 scale)) sum_{n<=degree} b_n L_n(x/scale), with
/// b_n = int_0^inf exp(-s) L_n(s) g(scale s) exp(s/2) ds by Gauss-Laguerre
/// quadrature on 2 degree + 8 nodes.
inline PolySeries fit_laguerre(const std::function<double(double)>& g, std::size_t degree, double scale = 1.0) {
    using Ext = long double;
    const auto basis = BasisSpec::weighted_laguerre(scale);
    const auto rule = gauss_laguerre_nodes<Ext>(2 * degree + 8);
    std::vector<Ext> acc(degree + 1, 0.0L);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Ext s = rule.nodes[i];
        const Ext gv = static_cast<Ext>(g(static_cast<double>(scale * s)));
        if (!std::isfinite(gv)) throw std::domain_error("fit_laguerre: function is not finite at a node");
        const Ext w = rule.weights[i] * gv * std::exp(s / 2);
        const auto L = basis_values<Ext>(basis, degree, s);
        for (std::size_t n = 0; n <= degree; ++n) acc[n] += w * L[n];
    }
    std::vector<double> b(acc.begin(), acc.end());
    return {basis, half_line, std::move(b)};
}

}  // namespace volconv
