#include "pdu/unwind.hpp"

#include <algorithm>
#include <cmath>

#include "pdu/blaschke.hpp"
#include "pdu/spectral.hpp"

namespace pdu {

namespace {

// Relative L2 threshold below which g - lowpass(g) counts as identically zero.
constexpr double kConvergedTol = 1e-13;

double energy(const std::vector<cdouble>& v) {
    double s = 0.0;
    for (const cdouble& z : v) s += std::norm(z);
    return s;
}

CircleSignal zeros_like(std::size_t n) {
    return CircleSignal(std::vector<cdouble>(n, 0.0));
}

}  // namespace

void PduConfig::validate() const {
    if (lowpass_order < 0)
        throw std::invalid_argument("PduConfig: lowpass_order must be >= 0");
    if (n_components < 1)
        throw std::invalid_argument("PduConfig: n_components must be >= 1");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("PduConfig: epsilon must be positive");
    if (upsample_factor < 1)
        throw std::invalid_argument("PduConfig: upsample_factor must be >= 1");
    if (!(residual_energy_stop >= 0.0 && residual_energy_stop < 1.0))
        throw std::invalid_argument("PduConfig: residual_energy_stop in [0, 1)");
}

CircleSignal lowpass(const CircleSignal& f, int order) {
    if (order < 0) throw std::invalid_argument("lowpass: order must be >= 0");
    if (order >= static_cast<int>(f.size()))
        throw std::invalid_argument("lowpass: order must be < signal length");
    Spectrum sp = spectrum_of(f);
    for (int k = sp.k_min(); k <= sp.k_max(); ++k)
        if (k < 0 || k > order) sp.at(k) = 0.0;
    return synthesize(sp);
}

std::optional<UnwindStep> unwind_step(const CircleSignal& g, int lowpass_order,
                                      double epsilon) {
    CircleSignal am = lowpass(g, lowpass_order);
    std::vector<cdouble> diff(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) diff[i] = g.values[i] - am.values[i];

    const double g_norm = detail::l2_norm(g.values);
    if (detail::l2_norm(diff) <= kConvergedTol * std::max(g_norm, 1e-300))
        return std::nullopt;

    CircleSignal d(std::move(diff));
    BlaschkeFactorization bf =
        factorize(d, epsilon * detail::max_abs(d.values));
    return UnwindStep{std::move(am), std::move(bf.inner), std::move(bf.outer)};
}

PduDecomposition decompose(const CircleSignal& f, const PduConfig& cfg) {
    cfg.validate();
    const std::size_t n = f.size();
    if (detail::max_abs(f.values) == 0.0)
        throw DegenerateSignalError("decompose: signal is identically zero");

    PduDecomposition out;
    out.trend = lowpass(f, cfg.lowpass_order);

    const double input_energy = energy(f.values);
    std::vector<cdouble> inner_product(n, 1.0);
    CircleSignal g = f;
    CircleSignal am = out.trend;

    for (int k = 0; k < cfg.n_components; ++k) {
        std::vector<cdouble> diff(n);
        for (std::size_t i = 0; i < n; ++i)
            diff[i] = g.values[i] - am.values[i];
        const double diff_norm = detail::l2_norm(diff);
        if (diff_norm <= kConvergedTol * std::max(detail::l2_norm(g.values), 1e-300))
            break;  // converged: nothing left to unwind

        CircleSignal d(std::move(diff));
        BlaschkeFactorization bf = factorize(d, cfg.epsilon * detail::max_abs(d.values));
        for (std::size_t i = 0; i < n; ++i) inner_product[i] *= bf.inner.values[i];

        g = std::move(bf.outer);
        am = lowpass(g, cfg.lowpass_order);

        std::vector<cdouble> component(n);
        for (std::size_t i = 0; i < n; ++i)
            component[i] = am.values[i] * inner_product[i];
        out.amplitudes.push_back(am);
        out.unimodular_parts.push_back(CircleSignal(inner_product));
        out.components.push_back(CircleSignal(std::move(component)));

        // remaining (unexpanded) part has the energy of g - am since the
        // accumulated inner product is unimodular
        std::vector<cdouble> rem(n);
        for (std::size_t i = 0; i < n; ++i) rem[i] = g.values[i] - am.values[i];
        if (energy(rem) < cfg.residual_energy_stop * input_energy) break;
    }

    std::vector<cdouble> resid(n);
    for (std::size_t i = 0; i < n; ++i) {
        cdouble acc = f.values[i] - out.trend.values[i];
        for (const CircleSignal& c : out.components) acc -= c.values[i];
        resid[i] = acc;
    }
    out.residual = CircleSignal(std::move(resid));
    return out;
}

CircleSignal reconstruct(const PduDecomposition& d, std::size_t k) {
    if (k > d.components.size())
        throw std::invalid_argument("reconstruct: fewer components than requested");
    std::vector<cdouble> acc = d.trend.values;
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += d.components[c].values[i];
    return CircleSignal(std::move(acc));
}

PduDecomposition decompose_real(const RealSignal& s, const PduConfig& cfg) {
    cfg.validate();
    CircleSignal analytic = analytic_projection(flip_periodize(s));
    CircleSignal dense = upsample(analytic, cfg.upsample_factor);
    PduDecomposition dec = decompose(dense, cfg);

    auto to_input_grid = [&](const CircleSignal& c) {
        return unflip(downsample(c, cfg.upsample_factor));
    };
    PduDecomposition out;
    out.trend = to_input_grid(dec.trend);
    out.residual = to_input_grid(dec.residual);
    for (std::size_t k = 0; k < dec.components.size(); ++k) {
        out.components.push_back(to_input_grid(dec.components[k]));
        out.amplitudes.push_back(to_input_grid(dec.amplitudes[k]));
        out.unimodular_parts.push_back(to_input_grid(dec.unimodular_parts[k]));
    }
    return out;
}

}  // namespace pdu
