#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "volconv/basis.hpp"

namespace volconv {

/// Closed interval [a, b]. For weighted Laguerre series b is +infinity.
struct Interval {
    double a = -1.0;
    double b = 1.0;

    [[nodiscard]] double length() const { return b - a; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

inline constexpr Interval canonical_interval{-1.0, 1.0};
inline constexpr Interval half_line{0.0, std::numeric_limits<double>::infinity()};

namespace detail {

// exp(-s/2) * sum_k c_k L_k(s). The forward recurrence is rescaled whenever it
// grows past 2^300 so that large s neither overflows nor underflows early.
inline double weighted_laguerre_sum(std::span<const double> c, double s) {
    long double p0 = 1.0L, p1 = 1.0L - s;
    long double sum = c[0];
    long double log_scale = 0.0L;
    if (c.size() > 1) sum += c[1] * p1;
    for (std::size_t k = 1; k + 1 < c.size(); ++k) {
        const long double kk = static_cast<long double>(k);
        const long double p2 = ((2 * kk + 1 - s) * p1 - kk * p0) / (kk + 1);
        p0 = p1;
        p1 = p2;
        sum += c[k + 1] * p1;
        const long double mag = std::max(std::fabs(p1), std::fabs(sum));
        if (mag > 0x1p300L) {
            p0 *= 0x1p-300L;
            p1 *= 0x1p-300L;
            sum *= 0x1p-300L;
            log_scale += 300.0L * std::log(2.0L);
        }
    }
    if (sum == 0.0L) return 0.0;
    return static_cast<double>(sum * std::exp(log_scale - 0.5L * s));
}

}  // namespace detail

/// A finite orthogonal-polynomial series sum_m c_m p_m on an interval.
///
/// Finite-interval series are evaluated after the affine map [a, b] -> [-1, 1];
/// weighted Laguerre series live on [0, inf) and include the exponential weight.
class PolySeries {
public:
    PolySeries(BasisSpec basis, Interval domain, std::vector<double> coeffs)
        : basis_(basis), domain_(domain), coeffs_(std::move(coeffs)) {
        basis_.validate();
        if (coeffs_.empty()) throw std::invalid_argument("PolySeries: empty coefficient vector");
        if (basis_.finite_interval()) {
            if (!(domain_.a < domain_.b) || !std::isfinite(domain_.a) || !std::isfinite(domain_.b))
                throw std::invalid_argument("PolySeries: domain must satisfy a < b");
        } else {
            domain_ = half_line;
        }
    }

    /// Series on [-1, 1].
    PolySeries(BasisSpec basis, std::vector<double> coeffs)
        : PolySeries(basis, basis.finite_interval() ? canonical_interval : half_line,
                     std::move(coeffs)) {}

    [[nodiscard]] const BasisSpec& basis() const { return basis_; }
    [[nodiscard]] const Interval& domain() const { return domain_; }
    [[nodiscard]] std::span<const double> coeffs() const { return coeffs_; }
    [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }

    [[nodiscard]] double to_canonical(double x) const {
        return (2.0 * x - domain_.a - domain_.b) / (domain_.b - domain_.a);
    }
    [[nodiscard]] double from_canonical(double y) const {
        return domain_.a + 0.5 * (y + 1.0) * (domain_.b - domain_.a);
    }

    [[nodiscard]] bool contains(double x) const {
        if (!basis_.finite_interval()) return x >= 0.0;
        const double slack = 64.0 * std::numeric_limits<double>::epsilon() *
                             std::max(std::abs(domain_.a), std::abs(domain_.b));
        return x >= domain_.a - slack && x <= domain_.b + slack;
    }

    /// Value at one point; throws std::domain_error outside the domain.
    [[nodiscard]] double operator()(double x) const {
        if (!contains(x)) throw std::domain_error("PolySeries: evaluation point outside the domain");
        if (!basis_.finite_interval()) return detail::weighted_laguerre_sum(coeffs_, x / basis_.scale);
        const double y = std::clamp(to_canonical(x), -1.0, 1.0);
        return clenshaw<double>(basis_, coeffs_, y);
    }

    [[nodiscard]] std::vector<double> operator()(std::span<const double> xs) const {
        std::vector<double> out;
        out.reserve(xs.size());
        for (double x : xs) out.push_back((*this)(x));
        return out;
    }

    /// Same coefficients on another interval (finite-interval families only).
    [[nodiscard]] PolySeries relabeled(Interval domain) const { return {basis_, domain, coeffs_}; }

private:
    BasisSpec basis_;
    Interval domain_;
    std::vector<double> coeffs_;
};

inline std::vector<double> evaluate(const PolySeries& s, std::span<const double> points) { return s(points); }

/// Chebyshev coefficients of the antiderivative that vanishes at x = -1.
/// Input length J+1, output length J+2.
inline std::vector<double> indefinite_integral_cheb(std::span<const double> alpha) {
    if (alpha.empty()) throw std::invalid_argument("indefinite_integral_cheb: empty coefficient vector");
    const std::size_t len = alpha.size() + 1;
    auto at = [&](std::size_t j) { return j < alpha.size() ? alpha[j] : 0.0; };
    std::vector<double> out(len, 0.0);
    out[1] = at(0) - 0.5 * at(2);
    for (std::size_t j = 2; j < len; ++j) out[j] = (at(j - 1) - at(j + 1)) / (2.0 * j);
    double c0 = 0.0;
    for (std::size_t j = 1; j < len; ++j) c0 += (j % 2 == 1) ? out[j] : -out[j];
    out[0] = c0;
    return out;
}

}  // namespace volconv
