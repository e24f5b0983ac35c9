#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace volconv::named {

/// Renewal-equation kernel x^2 e^{-x} / 2.
inline double renewal_f(double x) { return 0.5 * x * x * std::exp(-x); }

/// Solution of u(x) = f(x) + int_0^x f(x - t) u(t) dt for the kernel above.
inline double renewal_u(double x) {
    const double r = std::numbers::sqrt3 / 2.0;
    return 1.0 / 3.0 - (std::cos(r * x) + std::numbers::sqrt3 * std::sin(r * x)) * std::exp(-1.5 * x) / 3.0;
}

/// renewal_u without its constant, so that it decays on [0, inf).
inline double laguerre_g(double x) {
    const double r = std::numbers::sqrt3 / 2.0;
    return -(std::cos(r * x) + std::numbers::sqrt3 * std::sin(r * x)) * std::exp(-1.5 * x) / 3.0;
}

/// (renewal_f * laguerre_g)(x) on [0, inf).
inline double laguerre_h(double x) {
    const double r = std::numbers::sqrt3 / 2.0;
    return -std::exp(-1.5 * x) *
           (std::exp(0.5 * x) * (x * x - x - 1.0) + std::numbers::sqrt3 * std::sin(r * x) + std::cos(r * x)) / 3.0;
}

inline const std::map<std::string, std::function<double(double)>>& registry() {
    static const std::map<std::string, std::function<double(double)>> r{
        {"renewal_f", renewal_f},
        {"renewal_u", renewal_u},
        {"laguerre_g", laguerre_g},
        {"laguerre_h", laguerre_h},
        {"exp", [](double x) { return std::exp(x); }},
        {"one", [](double) { return 1.0; }},
    };
    return r;
}

inline std::function<double(double)> lookup(const std::string& name) {
    const auto& r = registry();
    const auto it = r.find(name);
    if (it == r.end()) throw std::invalid_argument("unknown function '" + name + "'");
    return it->second;
}

}  // namespace volconv::named
