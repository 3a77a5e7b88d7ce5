#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "pdu/types.hpp"

namespace testutil {

using pdu::cdouble;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double rel_l2_error(const std::vector<cdouble>& got,
                           const std::vector<cdouble>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += std::norm(got[i] - want[i]);
        den += std::norm(want[i]);
    }
    return std::sqrt(num / den);
}

inline double rel_l2_error(const std::vector<double>& got,
                           const std::vector<double>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += (got[i] - want[i]) * (got[i] - want[i]);
        den += want[i] * want[i];
    }
    return std::sqrt(num / den);
}

inline double max_abs_diff(const std::vector<cdouble>& got,
                           const std::vector<cdouble>& want) {
    double m = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        m = std::max(m, std::abs(got[i] - want[i]));
    return m;
}

// samples of a polynomial in z = e^{it} on the n-point circle grid
inline pdu::CircleSignal sample_polynomial(const std::vector<cdouble>& coeffs,
                                           std::size_t n) {
    std::vector<cdouble> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const cdouble z = std::polar(1.0, kTwoPi * static_cast<double>(i) /
                                              static_cast<double>(n));
        cdouble acc = 0.0;
        for (std::size_t p = coeffs.size(); p-- > 0;) acc = acc * z + coeffs[p];
        v[i] = acc;
    }
    return pdu::CircleSignal(std::move(v));
}

// scale * prod (z - r) sampled on the circle
inline std::vector<cdouble> polynomial_from_roots(const std::vector<cdouble>& roots,
                                                  cdouble scale = 1.0) {
    std::vector<cdouble> c{scale};
    for (const cdouble& r : roots) {
        std::vector<cdouble> next(c.size() + 1, 0.0);
        for (std::size_t p = 0; p < c.size(); ++p) {
            next[p] += -r * c[p];
            next[p + 1] += c[p];
        }
        c = std::move(next);
    }
    return c;
}

inline pdu::CircleSignal sample_polynomial_from_roots(
    const std::vector<cdouble>& roots, std::size_t n, cdouble scale = 1.0) {
    return sample_polynomial(polynomial_from_roots(roots, scale), n);
}

// random real trigonometric polynomial with harmonics 1..max_harmonic
inline pdu::RealSignal random_band_limited(std::size_t n, double fs,
                                           int max_harmonic, std::uint64_t seed,
                                           bool zero_mean = false) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::vector<double> v(n, 0.0);
    const double offset = zero_mean ? 0.0 : amp(rng);
    for (int m = 1; m <= max_harmonic; ++m) {
        const double a = amp(rng), b = amp(rng);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = kTwoPi * static_cast<double>(i) * m /
                             static_cast<double>(n);
            v[i] += a * std::cos(t) + b * std::sin(t);
        }
    }
    for (double& x : v) x += offset;
    return pdu::RealSignal(std::move(v), fs);
}

}  // namespace testutil
