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
    {
        const double T0 = 8.0;
        const auto n = static_cast<std::size_t>(fs * T0);
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / fs;
            x[i] = 0.8 * std::cos(kTwoPi * 5.14 * t) +
                   2.0 * std::cos(kTwoPi * 26.0 * t);
        }
        PduConfig cfg;
        cfg.lowpass_order = 5;
        cfg.n_components = 2;
        cfg.upsample_factor = 16;
        cfg.residual_energy_stop = 0.0;
        PduDecomposition d = cumsum_decompose(RealSignal(x, fs), cfg,
                                              DecomposeStrategy::plain, nullptr, 2);
        const auto& c0 = d.components[0].values;
        std::printf("|comp1| profile (want ~0.8):\n");
        for (std::size_t i : {0ul, 1ul, 2ul, 5ul, 10ul, 50ul, 100ul, 500ul,
                              2048ul, 4000ul, 4085ul, 4090ul, 4093ul, 4094ul, 4095ul})
            std::printf("  i=%5zu |c|=%10.4f\n", i, std::abs(c0[i]));
        double worst = 0.0;
        std::size_t worst_i = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(c0[i]) > worst) { worst = std::abs(c0[i]); worst_i = i; }
        std::printf("  max |c| = %.3f at i=%zu of %zu\n", worst, worst_i, n);
    }
    for (double T0 : {8.0, 16.0}) {
        for (double eps : {1e-3, 1e-4, 1e-6}) {
            const int degree = 3;
            const auto n = static_cast<std::size_t>(fs * T0);
            std::vector<double> x(n), phi_low(n);
            for (std::size_t i = 0; i < n; ++i) {
                const double t = static_cast<double>(i) / fs;
                phi_low[i] = 5.14 * t;
                x[i] = 0.8 * std::cos(kTwoPi * 5.14 * t) +
                       2.0 * std::cos(kTwoPi * 26.0 * t);
            }
            PduConfig cfg;
            cfg.lowpass_order = 5;
            cfg.n_components = 2;
            cfg.upsample_factor = 16;
            cfg.residual_energy_stop = 0.0;
            cfg.epsilon = eps;
            WindowSpec w{0.25, 0.0625};
            PduDecomposition d = cumsum_decompose(RealSignal(x, fs), cfg,
                                                  DecomposeStrategy::windowed,
                                                  &w, degree);
            const double sd_full = phase_sd(d.components[0].values, phi_low);
            // interior-only SD (drop 0.5 s at each end) to see seam impact
            const auto skip = static_cast<std::size_t>(0.5 * fs);
            std::vector<cdouble> mid(d.components[0].values.begin() + skip,
                                     d.components[0].values.end() - skip);
            std::vector<double> phi_mid(phi_low.begin() + skip, phi_low.end() - skip);
            const double sd_mid = phase_sd(mid, phi_mid);
            const double d1 = am_nrmse(d.components[0].values,
                                       std::vector<double>(n, 0.8));
            std::printf("T0=%4.1f eps=%g  sd_full=%.4f sd_interior=%.4f am_nrmse=%.4f\n",
                        T0, eps, sd_full, sd_mid, d1);
        }
    }
    return 0;
}
