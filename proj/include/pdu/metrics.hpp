#pragma once

#include <cstddef>
#include <vector>

#include "pdu/types.hpp"

namespace pdu {

// NRMSE of the recovered envelope: || |component| - truth || / ||truth||.
double am_nrmse(const std::vector<cdouble>& component,
                const std::vector<double>& truth_am);

// Circular standard deviation sqrt(2*(1 - R)) of a set of angles, where R is
// the mean resultant length.
double circular_sd(const std::vector<double>& angles);

// Circular SD of arg(component/|component| * e^{-i 2 pi phi}); samples where
// |component| < 1e-12 * max are excluded.
double phase_sd(const std::vector<cdouble>& component,
                const std::vector<double>& truth_phase_cycles);

// ||f - Re(sum components)|| / ||f||.
double recon_nrmse(const std::vector<double>& f,
                   const std::vector<std::vector<cdouble>>& components);

// Matches components to ground-truth tracks by mean instantaneous frequency;
// result[i] is the truth index of component i (injective on the smaller side,
// minimizing total |mean IF| mismatch, ties to lower indices).
std::vector<std::size_t> match_components(
    const std::vector<std::vector<cdouble>>& components,
    const std::vector<std::vector<double>>& truth_ifs_hz, double sample_rate_hz);

// Mean IF in Hz from the endpoints of the unwrapped phase.
double mean_if_hz(const std::vector<cdouble>& component, double sample_rate_hz);

struct PairedTestResult {
    double statistic = 0.0;  // signed-rank sum of positive differences
    double p_value = 1.0;    // two-sided
    std::size_t n = 0;       // pairs after zero-difference exclusion
    int bonferroni_m = 1;
    bool significant = false;  // p < 0.05 / bonferroni_m
};

// Two-sided Wilcoxon signed-rank test with zero exclusion and midrank ties;
// exact enumeration for n <= 25, normal approximation with continuity
// correction above.
PairedTestResult wilcoxon_signed_rank(const std::vector<double>& x,
                                      const std::vector<double>& y,
                                      int bonferroni_m = 1);

}  // namespace pdu
