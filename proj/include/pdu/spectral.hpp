#pragma once

#include <cstddef>
#include <vector>

#include "pdu/types.hpp"

namespace pdu {

// Fourier coefficients of a circle signal under f(t) = sum_k c_k e^{ikt}.
Spectrum spectrum_of(const CircleSignal& s);

// Exact inverse of spectrum_of.
CircleSignal synthesize(const Spectrum& sp);

// Analytic signal c_0 + 2*sum_{k>0} c_k e^{ikt} of a real input. The Nyquist
// bin (even N) is kept at unit weight so Re(output) reproduces the input
// exactly.
CircleSignal analytic_projection(const RealSignal& s);

// Hardy-space projection of a complex circle signal: zeroes every
// negative-frequency coefficient, weights the rest by 1.
CircleSignal positive_projection(const CircleSignal& s);

// [f1..fN] -> [f1..fN, fN..f1]; the periodic extension has no jump.
RealSignal flip_periodize(const RealSignal& s);

// First half of an even-length flip-periodized signal.
RealSignal unflip(const RealSignal& s);
CircleSignal unflip(const CircleSignal& s);

// Trigonometric interpolation onto a factor-times finer grid (zero padding in
// frequency; the even-N Nyquist coefficient is split across +-N/2).
CircleSignal upsample(const CircleSignal& s, std::size_t factor);

// Keeps every factor-th grid sample.
CircleSignal downsample(const CircleSignal& s, std::size_t factor);

// Band-limited interpolation of a real signal via flip_periodize -> upsample
// -> unflip; output rate is factor * input rate.
RealSignal upsample_real(const RealSignal& s, std::size_t factor);

// Discrete antiderivative: out[k] = (1/fs) * sum_{j<=k} in[j].
RealSignal cumulative_sum(const RealSignal& s);

// Multiplies c_k by i*k*(2*pi/duration_s); the even-N Nyquist bin is zeroed.
CircleSignal spectral_derivative(const CircleSignal& s, double duration_s);

struct DetrendResult {
    RealSignal residual;
    // Trend coefficients in the basis x^p, x = index/(N-1) in [0, 1].
    std::vector<double> coefficients;
};

// Removes the least-squares polynomial of the given degree (2 or 3).
DetrendResult polynomial_detrend(const RealSignal& s, int degree);

// Evaluates the trend removed by polynomial_detrend on an n-sample grid.
std::vector<double> polynomial_trend(const std::vector<double>& coefficients,
                                     std::size_t n);

// Left-to-right cumulative 2*pi jump correction of arg(values), anchored at
// the first sample.
std::vector<double> unwrap_phase(const std::vector<cdouble>& values);

namespace detail {
// Shared core of analytic_projection: weights 1 at k=0, 2 at 0<k<N/2, 1 at
// the even-N Nyquist bin, 0 at k<0.
std::vector<cdouble> herglotz_projection(const std::vector<double>& samples);
}  // namespace detail

}  // namespace pdu
