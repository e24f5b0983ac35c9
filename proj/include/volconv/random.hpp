#pragma once

#include <cstdint>
#include <vector>

namespace volconv {

/// SplitMix64 (Steele, Lea & Flood). Fixed arithmetic, so a seed yields the
/// same stream on every platform and in every language that ports it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::uint64_t state_;
};

/// M+1 coefficients uniform in [-1, 1): a_m = 2 u_m - 1 with u_m from SplitMix64(seed).
inline std::vector<double> random_kernel(std::size_t M, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> a(M + 1);
    for (auto& v : a) v = 2.0 * rng.unit() - 1.0;
    return a;
}

}  // namespace volconv
