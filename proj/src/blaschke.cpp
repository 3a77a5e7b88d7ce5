#include "pdu/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pdu/spectral.hpp"

namespace pdu {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate_roots(const RootSet& r) {
    if (r.zero_multiplicity < 0)
        throw std::invalid_argument("RootSet: negative multiplicity at origin");
    for (const cdouble& a : r.roots)
        if (!(std::abs(a) < 1.0))
            throw std::invalid_argument("RootSet: root outside the open unit disk");
}
}  // namespace

double default_epsilon(const CircleSignal& f) {
    return 1e-6 * detail::max_abs(f.values);
}

BlaschkeFactorization factorize(const CircleSignal& f, double epsilon) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("factorize: epsilon must be positive");
    if (detail::max_abs(f.values) == 0.0)
        throw DegenerateSignalError("factorize: signal is identically zero");

    const std::size_t n = f.size();
    std::vector<double> log_mag(n);
    for (std::size_t i = 0; i < n; ++i)
        log_mag[i] = std::log(std::abs(f.values[i]) + epsilon);

    std::vector<cdouble> analytic_log = detail::herglotz_projection(log_mag);
    std::vector<cdouble> outer(n), inner(n);
    for (std::size_t i = 0; i < n; ++i) {
        outer[i] = std::exp(analytic_log[i]);
        inner[i] = f.values[i] / outer[i];
    }
    return {CircleSignal(std::move(inner)), CircleSignal(std::move(outer))};
}

CircleSignal eval_blaschke_product(const RootSet& r, std::size_t n) {
    validate_roots(r);
    if (n < 2) throw std::invalid_argument("eval_blaschke_product: grid too small");
    std::vector<cdouble> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        const cdouble z = std::polar(1.0, t);
        cdouble b = std::polar(1.0, static_cast<double>(r.zero_multiplicity) * t);
        for (const cdouble& a : r.roots) b *= (z - a) / (1.0 - std::conj(a) * z);
        out[i] = b;
    }
    return CircleSignal(std::move(out));
}

std::vector<double> blaschke_if(const RootSet& r, std::size_t n) {
    validate_roots(r);
    if (n < 2) throw std::invalid_argument("blaschke_if: grid too small");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        const cdouble z = std::polar(1.0, t);
        double v = static_cast<double>(r.zero_multiplicity);
        for (const cdouble& a : r.roots)
            v += (1.0 - std::norm(a)) / std::norm(z - a);
        out[i] = v;
    }
    return out;
}

int winding_number(const CircleSignal& f, double floor_rel) {
    const std::size_t n = f.size();
    double max_mag = detail::max_abs(f.values);
    double min_mag = max_mag;
    for (const cdouble& z : f.values) min_mag = std::min(min_mag, std::abs(z));
    if (min_mag <= floor_rel * max_mag || max_mag == 0.0)
        throw CurveThroughOriginError(
            "winding_number: curve passes too close to the origin");

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cdouble ratio = f.values[(i + 1) % n] / f.values[i];
        total += std::arg(ratio);
    }
    return static_cast<int>(std::lround(total / kTwoPi));
}

DiskField poisson_extend(const CircleSignal& f, const std::vector<double>& radii) {
    if (radii.empty()) throw std::invalid_argument("poisson_extend: no radii");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] >= 0.0 && radii[i] < 1.0))
            throw std::invalid_argument("poisson_extend: radius outside [0, 1)");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw std::invalid_argument("poisson_extend: radii must increase");
    }

    const std::size_t n = f.size();
    Spectrum sp = spectrum_of(f);
    DiskField field;
    field.radii = radii;
    field.angles.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        field.angles[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    field.values.reserve(radii.size());
    for (double r : radii) {
        Spectrum scaled = sp;
        for (int k = scaled.k_min(); k <= scaled.k_max(); ++k)
            scaled.at(k) *= std::pow(r, std::abs(k));
        field.values.push_back(synthesize(scaled).values);
    }
    return field;
}

std::vector<std::vector<bool>> root_region_map(const DiskField& field,
                                               double threshold) {
    // threshold <= 0 yields an all-false mask rather than an error
    std::vector<std::vector<bool>> mask(field.values.size());
    for (std::size_t r = 0; r < field.values.size(); ++r) {
        mask[r].resize(field.values[r].size());
        for (std::size_t a = 0; a < field.values[r].size(); ++a)
            mask[r][a] = std::abs(field.values[r][a]) < threshold;
    }
    return mask;
}

}  // namespace pdu
