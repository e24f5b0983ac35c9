#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "volconv/errors.hpp"
#include "volconv/fft.hpp"

namespace volconv {

/// Products above this size go through the FFT in apply_laguerre.
inline constexpr std::size_t laguerre_direct_limit = std::size_t{1} << 16;

/// Implicit weighted-Laguerre convolution matrix: entry (k, n) is
/// scale * (a_{k-n} - a_{k-n-1}) with a_j = 0 outside 0..M.
class LaguerreConvMatrix {
public:
    LaguerreConvMatrix(std::vector<double> a, std::size_t N, double scale = 1.0)
        : a_(std::move(a)), N_(N), scale_(scale) {
        if (a_.empty()) throw std::invalid_argument("LaguerreConvMatrix: empty kernel coefficient vector");
    }

    [[nodiscard]] std::span<const double> kernel() const { return a_; }
    [[nodiscard]] std::size_t M() const { return a_.size() - 1; }
    [[nodiscard]] std::size_t N() const { return N_; }
    [[nodiscard]] std::size_t rows() const { return M() + N_ + 2; }
    [[nodiscard]] std::size_t cols() const { return N_ + 1; }
    [[nodiscard]] double scale() const { return scale_; }

    [[nodiscard]] double operator()(std::size_t k, std::size_t n) const {
        if (k < n) return 0.0;
        const std::size_t d = k - n;
        const double hi = d < a_.size() ? a_[d] : 0.0;
        const double lo = (d >= 1 && d - 1 < a_.size()) ? a_[d - 1] : 0.0;
        return scale_ * (hi - lo);
    }

private:
    std::vector<double> a_;
    std::size_t N_;
    double scale_;
};

inline LaguerreConvMatrix build_laguerre(std::span<const double> a, std::size_t N, double scale = 1.0) {
    return {std::vector<double>(a.begin(), a.end()), N, scale};
}

inline Eigen::MatrixXd to_dense(const LaguerreConvMatrix& R) {
    Eigen::MatrixXd D(R.rows(), R.cols());
    for (std::size_t n = 0; n < R.cols(); ++n)
        for (std::size_t k = 0; k < R.rows(); ++k) D(k, n) = R(k, n);
    return D;
}

namespace detail {

// Accumulates in long double so that the direct path can serve as a reference.
inline std::vector<double> direct_convolve(std::span<const double> a, std::span<const double> b) {
    std::vector<long double> s(a.size() + b.size() - 1, 0.0L);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) s[i + j] += static_cast<long double>(a[i]) * b[j];
    return {s.begin(), s.end()};
}

}  // namespace detail

enum class ConvolutionPath { Automatic, Direct, Fft };

/// c = R b, length M + |b| + 1: c_k = s_k - s_{k-1} where s = a * b.
inline std::vector<double> apply_laguerre(const LaguerreConvMatrix& R, std::span<const double> b,
                                          ConvolutionPath path = ConvolutionPath::Automatic) {
    if (b.size() > R.cols()) throw DimensionError("apply_laguerre: coefficient vector longer than N+1");
    if (b.empty()) throw DimensionError("apply_laguerre: empty coefficient vector");
    const auto a = R.kernel();
    if (path == ConvolutionPath::Automatic)
        path = a.size() * b.size() > laguerre_direct_limit ? ConvolutionPath::Fft : ConvolutionPath::Direct;
    const auto s = path == ConvolutionPath::Fft ? detail::fft_convolve(a, b) : detail::direct_convolve(a, b);
    std::vector<double> c(s.size() + 1);
    double prev = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        c[k] = R.scale() * (s[k] - prev);
        prev = s[k];
    }
    c.back() = -R.scale() * prev;
    return c;
}

}  // namespace volconv
