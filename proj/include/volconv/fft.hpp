#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <mutex>
#include <span>
#include <vector>

#include <fftw3.h>

// Thin RAII wrappers over FFTW. Planner calls are serialized because FFTW's
// planner is not thread-safe; execution is.

namespace volconv::detail {

inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

class FftwPlan {
public:
    explicit FftwPlan(fftw_plan p) : plan_(p) {}
    FftwPlan(const FftwPlan&) = delete;
    FftwPlan& operator=(const FftwPlan&) = delete;
    ~FftwPlan() {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(plan_);
    }
    void execute() const { fftw_execute(plan_); }

private:
    fftw_plan plan_;
};

/// Type-I DCT, unnormalized: Y_k = x_0 + (-1)^k x_n + 2 sum_{j=1}^{n-1} x_j cos(pi j k / n).
inline std::vector<double> dct1(std::span<const double> x) {
    const std::size_t len = x.size();
    std::vector<double> in(x.begin(), x.end()), out(len);
    if (len == 1) {
        out[0] = in[0];
        return out;
    }
    fftw_plan p;
    {
        std::lock_guard lock(fftw_planner_mutex());
        p = fftw_plan_r2r_1d(static_cast<int>(len), in.data(), out.data(), FFTW_REDFT00, FFTW_ESTIMATE);
    }
    FftwPlan plan(p);
    plan.execute();
    return out;
}

/// Full linear convolution (length |a| + |b| - 1) through a real FFT.
inline std::vector<double> fft_convolve(std::span<const double> a, std::span<const double> b) {
    const std::size_t out_len = a.size() + b.size() - 1;
    std::size_t len = 1;
    while (len < out_len) len <<= 1;
    const std::size_t spec = len / 2 + 1;

    std::vector<double> xa(len, 0.0), xb(len, 0.0), y(len);
    std::copy(a.begin(), a.end(), xa.begin());
    std::copy(b.begin(), b.end(), xb.begin());
    std::vector<std::complex<double>> fa(spec), fb(spec);

    fftw_plan pa, pb, pc;
    {
        std::lock_guard lock(fftw_planner_mutex());
        pa = fftw_plan_dft_r2c_1d(static_cast<int>(len), xa.data(), reinterpret_cast<fftw_complex*>(fa.data()),
                                  FFTW_ESTIMATE);
        pb = fftw_plan_dft_r2c_1d(static_cast<int>(len), xb.data(), reinterpret_cast<fftw_complex*>(fb.data()),
                                  FFTW_ESTIMATE);
        pc = fftw_plan_dft_c2r_1d(static_cast<int>(len), reinterpret_cast<fftw_complex*>(fa.data()), y.data(),
                                  FFTW_ESTIMATE);
    }
    FftwPlan plan_a(pa), plan_b(pb), plan_c(pc);
    plan_a.execute();
    plan_b.execute();
    for (std::size_t i = 0; i < spec; ++i) fa[i] *= fb[i];
    plan_c.execute();

    std::vector<double> out(out_len);
    const double inv = 1.0 / static_cast<double>(len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = y[i] * inv;
    return out;
}

}  // namespace volconv::detail
