// temporary experiment driver, not part of the build
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "pdu/metrics.hpp"
#include "pdu/simulate.hpp"
#include "pdu/spectral.hpp"
#include "pdu/unwind.hpp"
#include "pdu/windowed.hpp"

using namespace pdu;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

int main() {
    const double fs = 512.0;
    const double T0 = 8.0;
    const auto n = static_cast<std::size_t>(fs * T0);

    // spec example: single tone 2 cos(2 pi 8 t), T=1/4, B=T/4
    std::vector<double> x(n), phi(n), amp(n, 2.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / fs;
        phi[i] = 8.0 * t;
        x[i] = 2.0 * std::cos(kTwoPi * 8.0 * t);
    }
    PduConfig cfg;  // L=5, upsample 16
    cfg.residual_energy_stop = 0.0;
    WindowSpec w{0.25, 0.0625};
    SegmentPlan plan = build_partition(w, T0, fs);
    std::printf("segments: %zu\n", plan.segments.size());

    CircleSignal comp = extract_component(RealSignal(x, fs), plan, cfg);
    std::printf("single tone 8 Hz: meanIF=%.3f am_nrmse=%.4f phase_sd=%.4f\n",
                mean_if_hz(comp.values, fs), am_nrmse(comp.values, amp),
                phase_sd(comp.values, phi));
    std::printf("  |comp| at i=0,1,5,128,2048,4090,4095: ");
    for (std::size_t i : {0ul, 1ul, 5ul, 128ul, 2048ul, 4090ul, 4095ul})
        std::printf("%.3f ", std::abs(comp.values[i]));
    std::printf("\n");

    // residual after one extraction
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = x[i] - comp.values[i].real();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
        num += r[i] * r[i];
        den += x[i] * x[i];
    }
    std::printf("  residual nrmse = %.4f\n", std::sqrt(num / den));

    // two well separated tones, amplitudes 2 (low) and 0.8 (high)
    std::vector<double> x2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / fs;
        x2[i] = 2.0 * std::cos(kTwoPi * 8.0 * t) + 0.8 * std::cos(kTwoPi * 25.0 * t);
    }
    CircleSignal c2 = extract_component(RealSignal(x2, fs), plan, cfg);
    std::printf("two tones: first extraction meanIF=%.3f (want ~8)\n",
                mean_if_hz(c2.values, fs));
    return 0;
}
