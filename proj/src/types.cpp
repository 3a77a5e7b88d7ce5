#include "pdu/types.hpp"

#include <cmath>

namespace pdu {

RealSignal::RealSignal(std::vector<double> s, double fs)
    : samples(std::move(s)), sample_rate_hz(fs) {
    if (samples.empty()) throw std::invalid_argument("RealSignal: empty samples");
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("RealSignal: sample rate must be positive");
    for (double v : samples)
        if (!std::isfinite(v))
            throw std::invalid_argument("RealSignal: non-finite sample");
}

CircleSignal::CircleSignal(std::vector<cdouble> v) : values(std::move(v)) {
    if (values.size() < 2)
        throw std::invalid_argument("CircleSignal: need at least 2 samples");
    for (const cdouble& z : values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("CircleSignal: non-finite sample");
}

namespace detail {

double l2_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double l2_norm(const std::vector<cdouble>& v) {
    double s = 0.0;
    for (const cdouble& z : v) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const std::vector<cdouble>& v) {
    double m = 0.0;
    for (const cdouble& z : v) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace detail

}  // namespace pdu
