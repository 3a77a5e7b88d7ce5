#include "pdu/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace pdu {

namespace {

// Box-Muller on top of mt19937_64; std::normal_distribution is avoided
// because its draw sequence is implementation-defined.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::size_t nearest_odd(double x) {
    auto k = static_cast<std::size_t>(x / 2.0);
    return 2 * k + 1;
}

// |smoothed walk| normalized to peak 1
std::vector<double> normalized_envelope(const std::vector<double>& walk,
                                        std::size_t span) {
    std::vector<double> sm = loess_smooth(walk, span);
    double peak = 0.0;
    for (double& v : sm) {
        v = std::abs(v);
        peak = std::max(peak, v);
    }
    if (peak > 0.0)
        for (double& v : sm) v /= peak;
    return sm;
}

// weighted degree-2 fit of y over offsets u, evaluated at u = 0
double wls_quadratic_at_center(const double* y, const double* w, const int* u,
                               std::size_t m) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, b0 = 0, b1 = 0, b2 = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double wi = w[i], ui = u[i];
        const double u2 = ui * ui;
        s0 += wi;
        s1 += wi * ui;
        s2 += wi * u2;
        s3 += wi * u2 * ui;
        s4 += wi * u2 * u2;
        b0 += wi * y[i];
        b1 += wi * ui * y[i];
        b2 += wi * u2 * y[i];
    }
    // solve the 3x3 normal equations for the constant term
    const double a11 = s0, a12 = s1, a13 = s2;
    const double a22 = s2, a23 = s3, a33 = s4;
    const double det = a11 * (a22 * a33 - a23 * a23) - a12 * (a12 * a33 - a23 * a13) +
                       a13 * (a12 * a23 - a22 * a13);
    const double c11 = a22 * a33 - a23 * a23;
    const double c12 = a13 * a23 - a12 * a33;
    const double c13 = a12 * a23 - a13 * a22;
    return (c11 * b0 + c12 * b1 + c13 * b2) / det;
}

}  // namespace

void AhmParams::validate() const {
    if (!(fs > 0.0) || !(T0 > 0.0))
        throw std::invalid_argument("AhmParams: fs and T0 must be positive");
    if (a1 < 0 || a2 < 0 || alpha1 < 0 || alpha2 < 0 || xi1 < 0 || xi2 < 0 ||
        beta1 < 0 || beta2 < 0)
        throw std::invalid_argument("AhmParams: parameters must be nonnegative");
}

std::vector<double> gaussian_random_walk(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gaussian_random_walk: n must be >= 1");
    GaussianSampler g(seed);
    std::vector<double> w(n);
    w[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) w[i] = w[i - 1] + g.next();
    return w;
}

std::vector<double> loess_smooth(const std::vector<double>& x, std::size_t span) {
    const std::size_t n = x.size();
    if (span < 3) throw std::invalid_argument("loess_smooth: span must be >= 3");
    if (span > n) throw std::invalid_argument("loess_smooth: span exceeds length");

    const std::size_t h = (span - 1) / 2;
    std::vector<double> out(n);

    // interior: the tricube weight pattern is translation invariant, so the
    // fitted value is a fixed filter
    std::vector<double> w(span);
    std::vector<int> u(span);
    std::vector<double> y(span);
    if (span % 2 == 1 && n >= span) {
        for (std::size_t j = 0; j < span; ++j) {
            u[j] = static_cast<int>(j) - static_cast<int>(h);
            const double d = std::abs(static_cast<double>(u[j])) / static_cast<double>(h);
            const double t = 1.0 - d * d * d;
            w[j] = t * t * t;
        }
        // filter coefficients = fit applied to unit impulses
        std::vector<double> coeff(span);
        for (std::size_t j = 0; j < span; ++j) {
            std::fill(y.begin(), y.end(), 0.0);
            y[j] = 1.0;
            coeff[j] = wls_quadratic_at_center(y.data(), w.data(), u.data(), span);
        }
        for (std::size_t i = h; i + h < n; ++i) {
            double acc = 0.0;
            const double* xi = &x[i - h];
            for (std::size_t j = 0; j < span; ++j) acc += coeff[j] * xi[j];
            out[i] = acc;
        }
    }

    // boundaries (and even spans): per-point weighted fit over the span
    // nearest samples
    for (std::size_t i = 0; i < n; ++i) {
        const bool interior = span % 2 == 1 && i >= h && i + h < n;
        if (interior) continue;
        std::size_t lo = i > h ? i - h : 0;
        lo = std::min(lo, n - span);
        double dmax = 0.0;
        for (std::size_t j = 0; j < span; ++j) {
            u[j] = static_cast<int>(lo + j) - static_cast<int>(i);
            dmax = std::max(dmax, std::abs(static_cast<double>(u[j])));
        }
        for (std::size_t j = 0; j < span; ++j) {
            const double d = std::abs(static_cast<double>(u[j])) / dmax;
            const double t = 1.0 - d * d * d;
            w[j] = t * t * t;
            y[j] = x[lo + j];
        }
        out[i] = wls_quadratic_at_center(y.data(), w.data(), u.data(), span);
    }
    return out;
}

AhmRealization synthesize(const AhmParams& p, std::uint64_t seed, int max_attempts) {
    p.validate();
    const auto n = static_cast<std::size_t>(std::floor(p.fs * p.T0));
    if (n < 2) throw std::invalid_argument("synthesize: fs*T0 too small");

    const std::size_t span_a = nearest_odd(2.2 * p.fs);
    const std::size_t span_b = nearest_odd(2.0 * p.fs);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        auto walk_seed = [&](int w) {
            return splitmix64(seed + 0x9E3779B97F4A7C15ull *
                                         static_cast<std::uint64_t>(attempt * 4 + w + 1));
        };
        std::vector<double> e1 =
            normalized_envelope(gaussian_random_walk(n, walk_seed(0)), span_a);
        std::vector<double> e2 =
            normalized_envelope(gaussian_random_walk(n, walk_seed(1)), span_b);
        std::vector<double> e3 =
            normalized_envelope(gaussian_random_walk(n, walk_seed(2)), span_a);
        std::vector<double> e4 =
            normalized_envelope(gaussian_random_walk(n, walk_seed(3)), span_b);

        AhmRealization r;
        r.seed = seed;
        r.A1.resize(n);
        r.A2.resize(n);
        r.if1.resize(n);
        r.if2.resize(n);
        double min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            r.A1[i] = p.a1 * (1.0 + p.alpha1 * e1[i]);
            r.A2[i] = p.a2 * (1.0 + p.alpha2 * e2[i]);
            r.if1[i] = p.xi1 + p.beta1 * e3[i];
            r.if2[i] = p.xi2 + p.beta2 * e4[i];
            min_gap = std::min(min_gap, r.if2[i] - r.if1[i]);
        }
        if (!(min_gap > p.min_if_gap)) continue;  // joint resample

        r.phi1.resize(n);
        r.phi2.resize(n);
        double acc1 = 0.0, acc2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc1 += r.if1[i] / p.fs;
            acc2 += r.if2[i] / p.fs;
            r.phi1[i] = acc1;
            r.phi2[i] = acc2;
        }
        std::vector<double> f(n);
        for (std::size_t i = 0; i < n; ++i)
            f[i] = r.A1[i] * std::cos(2.0 * std::numbers::pi * r.phi1[i]) +
                   r.A2[i] * std::cos(2.0 * std::numbers::pi * r.phi2[i]);
        r.signal = RealSignal(std::move(f), p.fs);
        return r;
    }
    throw GenerationFailureError("synthesize: rejection cap exceeded");
}

AhmParams preset(const std::string& name) {
    AhmParams p;
    p.fs = 512.0;
    p.T0 = 16.0;
    p.xi1 = 2.0 + std::numbers::pi;
    p.beta1 = 2.5;
    p.beta2 = 3.0;
    if (name == "experiment1") {
        p.a1 = 2.0;
        p.a2 = 0.8;
        p.alpha1 = 1.0;
        p.alpha2 = 1.0;
        p.xi2 = 8.0;
    } else if (name == "experiment2") {
        p.a1 = 0.8;
        p.a2 = 2.0;
        p.alpha1 = 0.1;
        p.alpha2 = 0.1;
        p.xi2 = 26.0;
    } else {
        throw std::invalid_argument("preset: unknown name '" + name + "'");
    }
    return p;
}

}  // namespace pdu
