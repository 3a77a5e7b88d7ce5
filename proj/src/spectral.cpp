#include "pdu/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pdu/fft.hpp"

namespace pdu {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Spectrum spectrum_of(const CircleSignal& s) {
    Spectrum sp;
    sp.bins = fft::forward(s.values);
    const double inv_n = 1.0 / static_cast<double>(sp.bins.size());
    for (cdouble& c : sp.bins) c *= inv_n;
    return sp;
}

CircleSignal synthesize(const Spectrum& sp) {
    return CircleSignal(fft::backward(sp.bins));
}

namespace detail {

std::vector<cdouble> herglotz_projection(const std::vector<double>& samples) {
    const std::size_t n = samples.size();
    std::vector<cdouble> buf(samples.begin(), samples.end());
    buf = fft::forward(buf);
    const std::size_t half = n / 2;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t b = 0; b < n; ++b) {
        double w;
        if (b == 0)
            w = 1.0;
        else if (b < half || (b == half && n % 2 == 1))
            w = 2.0;
        else if (b == half)  // even-N Nyquist
            w = 1.0;
        else
            w = 0.0;
        buf[b] *= w * inv_n;
    }
    return fft::backward(buf);
}

}  // namespace detail

CircleSignal analytic_projection(const RealSignal& s) {
    if (s.size() < 2)
        throw std::invalid_argument("analytic_projection: need at least 2 samples");
    return CircleSignal(detail::herglotz_projection(s.samples));
}

CircleSignal positive_projection(const CircleSignal& s) {
    Spectrum sp = spectrum_of(s);
    for (int k = sp.k_min(); k < 0; ++k) sp.at(k) = 0.0;
    return synthesize(sp);
}

RealSignal flip_periodize(const RealSignal& s) {
    std::vector<double> out;
    out.reserve(2 * s.size());
    out.insert(out.end(), s.samples.begin(), s.samples.end());
    out.insert(out.end(), s.samples.rbegin(), s.samples.rend());
    return RealSignal(std::move(out), s.sample_rate_hz);
}

RealSignal unflip(const RealSignal& s) {
    if (s.size() % 2 != 0)
        throw std::invalid_argument("unflip: length must be even");
    return RealSignal(
        std::vector<double>(s.samples.begin(), s.samples.begin() + s.size() / 2),
        s.sample_rate_hz);
}

CircleSignal unflip(const CircleSignal& s) {
    if (s.size() % 2 != 0)
        throw std::invalid_argument("unflip: length must be even");
    return CircleSignal(
        std::vector<cdouble>(s.values.begin(), s.values.begin() + s.size() / 2));
}

CircleSignal upsample(const CircleSignal& s, std::size_t factor) {
    if (factor == 0) throw std::invalid_argument("upsample: factor must be >= 1");
    if (factor == 1) return s;
    const std::size_t n = s.size();
    const std::size_t m = n * factor;
    Spectrum src = spectrum_of(s);
    Spectrum dst;
    dst.bins.assign(m, 0.0);
    for (int k = src.k_min(); k <= src.k_max(); ++k) {
        if (n % 2 == 0 && k == src.k_min()) {
            // split the Nyquist coefficient so real inputs stay real
            dst.at(k) = 0.5 * src.at(k);
            dst.at(-k) = 0.5 * src.at(k);
        } else {
            dst.at(k) = src.at(k);
        }
    }
    return synthesize(dst);
}

CircleSignal downsample(const CircleSignal& s, std::size_t factor) {
    if (factor == 0) throw std::invalid_argument("downsample: factor must be >= 1");
    if (s.size() % factor != 0)
        throw std::invalid_argument("downsample: factor must divide the length");
    std::vector<cdouble> out;
    out.reserve(s.size() / factor);
    for (std::size_t i = 0; i < s.size(); i += factor) out.push_back(s.values[i]);
    return CircleSignal(std::move(out));
}

RealSignal upsample_real(const RealSignal& s, std::size_t factor) {
    if (factor == 0)
        throw std::invalid_argument("upsample_real: factor must be >= 1");
    if (factor == 1) return s;
    RealSignal flipped = flip_periodize(s);
    CircleSignal dense =
        upsample(CircleSignal(std::vector<cdouble>(flipped.samples.begin(),
                                                   flipped.samples.end())),
                 factor);
    std::vector<double> front(s.size() * factor);
    for (std::size_t i = 0; i < front.size(); ++i) front[i] = dense.values[i].real();
    return RealSignal(std::move(front), s.sample_rate_hz * static_cast<double>(factor));
}

RealSignal cumulative_sum(const RealSignal& s) {
    std::vector<double> out(s.size());
    const double dt = 1.0 / s.sample_rate_hz;
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        acc += s.samples[i] * dt;
        out[i] = acc;
    }
    return RealSignal(std::move(out), s.sample_rate_hz);
}

CircleSignal spectral_derivative(const CircleSignal& s, double duration_s) {
    if (!(duration_s > 0.0))
        throw std::invalid_argument("spectral_derivative: duration must be positive");
    Spectrum sp = spectrum_of(s);
    const double omega = kTwoPi / duration_s;
    for (int k = sp.k_min(); k <= sp.k_max(); ++k) {
        if (s.size() % 2 == 0 && k == sp.k_min())
            sp.at(k) = 0.0;
        else
            sp.at(k) *= cdouble(0.0, omega * static_cast<double>(k));
    }
    return synthesize(sp);
}

DetrendResult polynomial_detrend(const RealSignal& s, int degree) {
    if (degree != 2 && degree != 3)
        throw std::invalid_argument("polynomial_detrend: degree must be 2 or 3");
    const std::size_t n = s.size();
    if (n <= static_cast<std::size_t>(degree))
        throw std::invalid_argument("polynomial_detrend: signal shorter than degree+1");

    const int dim = degree + 1;
    // normal equations on x = i/(n-1)
    std::vector<double> gram(dim * dim, 0.0), rhs(dim, 0.0);
    const double dx = 1.0 / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) * dx;
        double pow_x[8];
        pow_x[0] = 1.0;
        for (int p = 1; p < 2 * dim - 1; ++p) pow_x[p] = pow_x[p - 1] * x;
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) gram[r * dim + c] += pow_x[r + c];
            rhs[r] += pow_x[r] * s.samples[i];
        }
    }
    // Gaussian elimination with partial pivoting on the small system
    std::vector<double> a = gram, b = rhs;
    for (int col = 0; col < dim; ++col) {
        int piv = col;
        for (int r = col + 1; r < dim; ++r)
            if (std::abs(a[r * dim + col]) > std::abs(a[piv * dim + col])) piv = r;
        for (int c = 0; c < dim; ++c) std::swap(a[col * dim + c], a[piv * dim + c]);
        std::swap(b[col], b[piv]);
        const double d = a[col * dim + col];
        for (int r = col + 1; r < dim; ++r) {
            const double f = a[r * dim + col] / d;
            for (int c = col; c < dim; ++c) a[r * dim + c] -= f * a[col * dim + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> coeff(dim, 0.0);
    for (int r = dim - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < dim; ++c) acc -= a[r * dim + c] * coeff[c];
        coeff[r] = acc / a[r * dim + r];
    }

    std::vector<double> trend = polynomial_trend(coeff, n);
    std::vector<double> resid(n);
    for (std::size_t i = 0; i < n; ++i) resid[i] = s.samples[i] - trend[i];
    return {RealSignal(std::move(resid), s.sample_rate_hz), std::move(coeff)};
}

std::vector<double> polynomial_trend(const std::vector<double>& coefficients,
                                     std::size_t n) {
    std::vector<double> out(n, 0.0);
    if (n == 0) return out;
    const double dx = n > 1 ? 1.0 / static_cast<double>(n - 1) : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) * dx;
        double acc = 0.0;
        for (std::size_t p = coefficients.size(); p-- > 0;)
            acc = acc * x + coefficients[p];
        out[i] = acc;
    }
    return out;
}

std::vector<double> unwrap_phase(const std::vector<cdouble>& values) {
    std::vector<double> phase(values.size());
    if (values.empty()) return phase;
    phase[0] = std::arg(values[0]);
    for (std::size_t i = 1; i < values.size(); ++i) {
        double step = std::arg(values[i]) - std::arg(values[i - 1]);
        if (step > std::numbers::pi)
            step -= kTwoPi;
        else if (step <= -std::numbers::pi)
            step += kTwoPi;
        phase[i] = phase[i - 1] + step;
    }
    return phase;
}

}  // namespace pdu
