#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

// Shared helpers for the test suites.

namespace testutil {

inline double rel_err(double value, double reference) {
    if (reference == 0.0) return std::abs(value);
    return std::abs(value - reference) / std::abs(reference);
}

/// n log-spaced values in [lo, hi].
inline std::vector<double> log_space(double lo, double hi, int n) {
    std::vector<double> out(n);
    const double la = std::log10(lo), lb = std::log10(hi);
    for (int i = 0; i < n; ++i) out[i] = std::pow(10.0, la + (lb - la) * i / (n - 1));
    return out;
}

/// Deterministic RNG for property-style tests.
inline std::mt19937_64 rng(unsigned seed = 0xfdc0ffee) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

inline double log_uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::pow(10.0, uniform(gen, std::log10(lo), std::log10(hi)));
}

// Independent quadrature oracle for the modified Bessel function K2 via the
// integral representation ∫₀^∞ e^{−x·cosh t}·cosh(2t) dt (adaptive Simpson,
// ~1e-12 relative).
namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double b) {
    const double m = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
}

inline double adaptive(const std::function<double(double)>& f, double a, double b, double whole,
                       double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double left = simpson(f, a, m);
    const double right = simpson(f, m, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return adaptive(f, a, m, left, 0.5 * eps, depth - 1) +
           adaptive(f, m, b, right, 0.5 * eps, depth - 1);
}

} // namespace detail

inline double k2_quadrature(double x) {
    auto integrand = [x](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(2.0 * t); };
    const double t_cut = std::acosh(std::max(60.0 / x + 10.0, 20.0));
    const double coarse = detail::simpson(integrand, 0.0, t_cut);
    return detail::adaptive(integrand, 0.0, t_cut, coarse, 1e-12 * std::abs(coarse) + 1e-300, 48);
}

} // namespace testutil
