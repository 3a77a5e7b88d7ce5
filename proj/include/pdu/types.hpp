#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdu {

using cdouble = std::complex<double>;

// Family of runtime failures that map to CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input signal is numerically unusable (all-zero / silent).
class DegenerateSignalError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Boundary curve passes too close to the origin for a winding count.
class CurveThroughOriginError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Rejection sampling exceeded its attempt cap.
class GenerationFailureError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Metric is undefined on the given inputs (e.g. no usable samples).
class UndefinedMetricError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Uniformly sampled real-valued signal.
struct RealSignal {
    std::vector<double> samples;
    double sample_rate_hz = 1.0;

    RealSignal() = default;
    RealSignal(std::vector<double> s, double fs);

    std::size_t size() const { return samples.size(); }
    double duration_s() const {
        return static_cast<double>(samples.size()) / sample_rate_hz;
    }
};

// Complex samples on the uniform circle grid t_k = 2*pi*k/N, k = 0..N-1.
struct CircleSignal {
    std::vector<cdouble> values;

    CircleSignal() = default;
    explicit CircleSignal(std::vector<cdouble> v);

    std::size_t size() const { return values.size(); }
};

// Fourier coefficients c_k of f(t) = sum_k c_k e^{ikt}, k in [-N/2, N/2).
// Stored in FFT bin order: bin b holds c_b for b <= (N-1)/2, else c_{b-N}.
struct Spectrum {
    std::vector<cdouble> bins;

    std::size_t size() const { return bins.size(); }
    int k_min() const { return -static_cast<int>(bins.size()) / 2; }
    int k_max() const { return static_cast<int>(bins.size()) - 1 + k_min(); }

    const cdouble& at(int k) const { return bins[bin_of(k)]; }
    cdouble& at(int k) { return bins[bin_of(k)]; }

private:
    std::size_t bin_of(int k) const {
        const int n = static_cast<int>(bins.size());
        if (k < k_min() || k > k_max())
            throw std::out_of_range("Spectrum: frequency index " + std::to_string(k) +
                                    " outside [" + std::to_string(k_min()) + ", " +
                                    std::to_string(k_max()) + "]");
        return static_cast<std::size_t>(k < 0 ? k + n : k);
    }
};

namespace detail {
double l2_norm(const std::vector<double>& v);
double l2_norm(const std::vector<cdouble>& v);
double max_abs(const std::vector<double>& v);
double max_abs(const std::vector<cdouble>& v);
}  // namespace detail

}  // namespace pdu
