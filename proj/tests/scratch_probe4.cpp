// temporary experiment driver, not part of the build
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "pdu/metrics.hpp"
#include "pdu/spectral.hpp"
#include "pdu/unwind.hpp"
#include "pdu/windowed.hpp"

using namespace pdu;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

int main() {
    const double fs = 512.0;
    const double T0 = 8.0;
    const auto n = static_cast<std::size_t>(fs * T0);
    std::vector<double> x(n), phi(n), amp(n, 2.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / fs;
        phi[i] = 8.0 * t;
        x[i] = 2.0 * std::cos(kTwoPi * 8.0 * t);
    }
    for (int L : {3, 4, 5, 6, 7}) {
        PduConfig cfg;
        cfg.lowpass_order = L;
        cfg.residual_energy_stop = 0.0;
        WindowSpec w{0.25, 0.0625};
        SegmentPlan plan = build_partition(w, T0, fs);
        CircleSignal comp = extract_component(RealSignal(x, fs), plan, cfg);
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = x[i] - comp.values[i].real();
        double num = 0, den = 0;
        for (std::size_t i = 0; i < n; ++i) { num += r[i]*r[i]; den += x[i]*x[i]; }
        std::printf("L=%d: am=%.4f sd=%.4f resid=%.4f\n", L,
                    am_nrmse(comp.values, amp), phase_sd(comp.values, phi),
                    std::sqrt(num/den));
    }
    return 0;
}
