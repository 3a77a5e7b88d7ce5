#include "pdu/windowed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "pdu/spectral.hpp"

namespace pdu {

namespace {

constexpr double kPi = std::numbers::pi;

double energy(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

// polar split with a guard at zeros so component = amplitude * unimodular
void polar_split(const std::vector<cdouble>& comp, std::vector<cdouble>& amp,
                 std::vector<cdouble>& uni) {
    amp.resize(comp.size());
    uni.resize(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
        const double m = std::abs(comp[i]);
        amp[i] = m;
        uni[i] = m > 0.0 ? comp[i] / m : cdouble(1.0, 0.0);
    }
}

// First PDU component of one windowed segment on its internal dense grid
// (flipped and upsampled); nullopt for silent or trend-only segments.
std::optional<CircleSignal> segment_first_dense(const RealSignal& seg,
                                                const PduConfig& cfg) {
    if (detail::max_abs(seg.samples) == 0.0) return std::nullopt;
    CircleSignal dense =
        upsample(analytic_projection(flip_periodize(seg)), cfg.upsample_factor);
    PduConfig one = cfg;
    one.n_components = 1;
    PduDecomposition dec = decompose(dense, one);
    if (dec.components.empty()) return std::nullopt;
    return dec.components[0];
}

// Spectral derivative of a real signal through its flip periodization.
RealSignal derivative_real(const RealSignal& s) {
    RealSignal flipped = flip_periodize(s);
    CircleSignal circ(std::vector<cdouble>(flipped.samples.begin(),
                                           flipped.samples.end()));
    CircleSignal der = spectral_derivative(circ, 2.0 * s.duration_s());
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = der.values[i].real();
    return RealSignal(std::move(out), s.sample_rate_hz);
}

std::vector<cdouble> decimate(const std::vector<cdouble>& v, std::size_t factor) {
    std::vector<cdouble> out;
    out.reserve(v.size() / factor);
    for (std::size_t i = 0; i < v.size(); i += factor) out.push_back(v[i]);
    return out;
}

}  // namespace

void WindowSpec::validate() const {
    if (!(taper_s > 0.0) || !(taper_s < half_support_s))
        throw std::invalid_argument("WindowSpec: need 0 < taper < half-support");
}

double taper_window(const WindowSpec& spec, double t) {
    spec.validate();
    const double T = spec.half_support_s, B = spec.taper_s;
    if (t < -T || t > T) return 0.0;
    if (t <= -T + B) {
        const double s = std::sin(kPi * (t + T) / (2.0 * B));
        return s * s;
    }
    if (t <= T - B) return 1.0;
    const double c = std::cos(kPi * (t - T + B) / (2.0 * B));
    return c * c;
}

namespace {

// even reflection at both edges, consistent with flip_periodize
std::size_t reflect_index(long long m, std::size_t n) {
    const auto nn = static_cast<long long>(n);
    while (m < 0 || m >= nn) {
        if (m < 0) m = -1 - m;
        if (m >= nn) m = 2 * nn - 1 - m;
    }
    return static_cast<std::size_t>(m);
}

}  // namespace

SegmentPlan build_partition(const WindowSpec& spec, double duration_s,
                            double sample_rate_hz) {
    spec.validate();
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("build_partition: sample rate must be positive");
    if (!(duration_s > 2.0 * spec.half_support_s))
        throw std::invalid_argument(
            "build_partition: duration must exceed the window support 2T");

    const double T = spec.half_support_s, B = spec.taper_s;
    const double shift = 2.0 * T - B;
    const double fs = sample_rate_hz;

    SegmentPlan plan;
    plan.spec = spec;
    plan.duration_s = duration_s;
    plan.sample_rate_hz = fs;

    // every lattice window whose support meets (0, duration); their sum is
    // identically 1 there because the excluded ones vanish on it
    for (std::size_t i = 0;; ++i) {
        const double center = static_cast<double>(i) * shift;
        if (center - T >= duration_s) break;
        Segment seg;
        seg.start_s = center - T;
        seg.end_s = center + T;
        seg.start_index = static_cast<long long>(std::ceil(seg.start_s * fs - 1e-9));
        const auto stop = static_cast<long long>(std::ceil(seg.end_s * fs - 1e-9));
        seg.window_samples.resize(static_cast<std::size_t>(stop - seg.start_index));
        for (long long k = seg.start_index; k < stop; ++k) {
            const double t = static_cast<double>(k) / fs;
            seg.window_samples[static_cast<std::size_t>(k - seg.start_index)] =
                taper_window(spec, t - center);
        }
        plan.segments.push_back(std::move(seg));
    }
    return plan;
}

std::vector<RealSignal> segment_and_dilate(const RealSignal& s,
                                           const SegmentPlan& plan) {
    if (std::abs(s.duration_s() - plan.duration_s) >
        1e-6 * std::max(1.0, plan.duration_s))
        throw std::invalid_argument("segment_and_dilate: plan/signal duration mismatch");
    if (std::abs(s.sample_rate_hz - plan.sample_rate_hz) >
        1e-6 * plan.sample_rate_hz)
        throw std::invalid_argument("segment_and_dilate: plan/signal rate mismatch");

    std::vector<RealSignal> out;
    out.reserve(plan.segments.size());
    for (const Segment& seg : plan.segments) {
        std::vector<double> x(seg.size());
        for (std::size_t k = 0; k < seg.size(); ++k) {
            const std::size_t src =
                reflect_index(seg.start_index + static_cast<long long>(k), s.size());
            x[k] = s.samples[src] * seg.window_samples[k];
        }
        out.emplace_back(std::move(x), s.sample_rate_hz);
    }
    return out;
}

CircleSignal extract_component(const RealSignal& s, const SegmentPlan& plan,
                               const PduConfig& cfg) {
    cfg.validate();
    std::vector<cdouble> acc(s.size(), 0.0);
    std::vector<RealSignal> pieces = segment_and_dilate(s, plan);
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        std::optional<CircleSignal> dense = segment_first_dense(pieces[j], cfg);
        if (!dense) continue;
        std::vector<cdouble> comp =
            decimate(dense->values, cfg.upsample_factor);  // still flipped, 2M
        const Segment& seg = plan.segments[j];
        for (std::size_t k = 0; k < seg.size(); ++k) {
            const long long g = seg.start_index + static_cast<long long>(k);
            if (g >= 0 && g < static_cast<long long>(acc.size()))
                acc[static_cast<std::size_t>(g)] += comp[k];
        }
    }
    return CircleSignal(std::move(acc));
}

PduDecomposition windowed_decompose(const RealSignal& s, const SegmentPlan& plan,
                                    const PduConfig& cfg, int n_components) {
    cfg.validate();
    if (n_components < 0)
        throw std::invalid_argument("windowed_decompose: n_components must be >= 0");

    PduDecomposition out;
    out.trend = CircleSignal(std::vector<cdouble>(s.size(), 0.0));

    const double input_energy = energy(s.samples);
    RealSignal running = s;
    for (int k = 0; k < n_components; ++k) {
        CircleSignal comp = extract_component(running, plan, cfg);
        for (std::size_t i = 0; i < s.size(); ++i)
            running.samples[i] -= comp.values[i].real();

        std::vector<cdouble> amp, uni;
        polar_split(comp.values, amp, uni);
        out.components.push_back(std::move(comp));
        out.amplitudes.push_back(CircleSignal(std::move(amp)));
        out.unimodular_parts.push_back(CircleSignal(std::move(uni)));

        if (energy(running.samples) < cfg.residual_energy_stop * input_energy)
            break;
    }
    out.residual = CircleSignal(std::vector<cdouble>(running.samples.begin(),
                                                     running.samples.end()));
    return out;
}

PduDecomposition cumsum_decompose(const RealSignal& s, const PduConfig& cfg,
                                  DecomposeStrategy strategy,
                                  const WindowSpec* window, int detrend_degree) {
    cfg.validate();
    if (strategy == DecomposeStrategy::windowed && window == nullptr)
        throw std::invalid_argument("cumsum_decompose: windowed strategy needs a window");

    const std::size_t factor = cfg.upsample_factor;
    RealSignal dense_input = upsample_real(s, factor);
    RealSignal antiderivative = cumulative_sum(dense_input);
    DetrendResult det = polynomial_detrend(antiderivative, detrend_degree);
    const RealSignal& detrended = det.residual;
    const double duration = s.duration_s();

    // the initial upsampling already refined the grid
    PduConfig inner_cfg = cfg;
    inner_cfg.upsample_factor = 1;

    PduDecomposition out;

    if (strategy == DecomposeStrategy::plain) {
        CircleSignal analytic = analytic_projection(flip_periodize(detrended));
        PduDecomposition dec = decompose(analytic, inner_cfg);
        // parts are periodic on the doubled circle, so the derivative there
        // is exact; restrict and decimate afterwards
        auto back = [&](const CircleSignal& c) {
            CircleSignal der = spectral_derivative(c, 2.0 * duration);
            return CircleSignal(decimate(unflip(der).values, factor));
        };
        out.trend = back(dec.trend);
        out.residual = back(dec.residual);
        for (const CircleSignal& c : dec.components) {
            CircleSignal comp = back(c);
            std::vector<cdouble> amp, uni;
            polar_split(comp.values, amp, uni);
            out.components.push_back(std::move(comp));
            out.amplitudes.push_back(CircleSignal(std::move(amp)));
            out.unimodular_parts.push_back(CircleSignal(std::move(uni)));
        }
        return out;
    }

    // windowed strategy: extract in the antiderivative domain, differentiate
    // each segment component on its own dense grid, stitch both
    SegmentPlan plan =
        build_partition(*window, duration, detrended.sample_rate_hz);
    const double input_energy = energy(detrended.samples);
    RealSignal running = detrended;
    const std::size_t n_out = s.size();
    out.trend = CircleSignal(std::vector<cdouble>(n_out, 0.0));

    for (int k = 0; k < cfg.n_components; ++k) {
        std::vector<cdouble> comp_bar(running.size(), 0.0);
        std::vector<cdouble> comp_der(running.size(), 0.0);
        std::vector<RealSignal> pieces = segment_and_dilate(running, plan);
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            std::optional<CircleSignal> dense =
                segment_first_dense(pieces[j], inner_cfg);
            if (!dense) continue;
            CircleSignal dense_der =
                spectral_derivative(*dense, 2.0 * pieces[j].duration_s());
            const Segment& seg = plan.segments[j];
            for (std::size_t i = 0; i < seg.size(); ++i) {
                const long long g = seg.start_index + static_cast<long long>(i);
                if (g < 0 || g >= static_cast<long long>(comp_bar.size())) continue;
                comp_bar[static_cast<std::size_t>(g)] += dense->values[i];
                comp_der[static_cast<std::size_t>(g)] += dense_der.values[i];
            }
        }
        for (std::size_t i = 0; i < running.size(); ++i)
            running.samples[i] -= comp_bar[i].real();

        std::vector<cdouble> comp = decimate(comp_der, factor);
        std::vector<cdouble> amp, uni;
        polar_split(comp, amp, uni);
        out.components.push_back(CircleSignal(std::move(comp)));
        out.amplitudes.push_back(CircleSignal(std::move(amp)));
        out.unimodular_parts.push_back(CircleSignal(std::move(uni)));

        if (energy(running.samples) < cfg.residual_energy_stop * input_energy)
            break;
    }

    RealSignal resid_der = derivative_real(running);
    std::vector<cdouble> resid(n_out);
    for (std::size_t i = 0; i < n_out; ++i) resid[i] = resid_der.samples[i * factor];
    out.residual = CircleSignal(std::move(resid));
    return out;
}

}  // namespace pdu
