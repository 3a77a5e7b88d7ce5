#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdu/types.hpp"

namespace pdu {

// Two-component adaptive-harmonic-model generator parameters.
struct AhmParams {
    double a1 = 0.0, a2 = 0.0;          // base amplitudes
    double alpha1 = 0.0, alpha2 = 0.0;  // AM depths
    double xi1 = 0.0, xi2 = 0.0;        // base frequencies, Hz
    double beta1 = 0.0, beta2 = 0.0;    // IF excursions, Hz
    double fs = 512.0;                  // sampling rate, Hz
    double T0 = 16.0;                   // duration, s
    double min_if_gap = 0.5;            // required min(if2 - if1), Hz

    void validate() const;
};

struct AhmRealization {
    RealSignal signal;
    std::vector<double> A1, A2;      // amplitude envelopes
    std::vector<double> phi1, phi2;  // phases, cycles
    std::vector<double> if1, if2;    // instantaneous frequencies, Hz
    std::uint64_t seed = 0;
};

// Random walk W(0)=0 with i.i.d. standard-normal increments drawn from
// mt19937_64 via Box-Muller; fully determined by the seed.
std::vector<double> gaussian_random_walk(std::size_t n, std::uint64_t seed);

// Local weighted least-squares smoothing with a degree-2 polynomial and
// tricube weights over the span nearest points.
std::vector<double> loess_smooth(const std::vector<double>& x, std::size_t span);

// Draws smoothed-walk envelopes and IF tracks, rejecting jointly until the IF
// separation constraint holds, then integrates phases and mixes the signal.
AhmRealization synthesize(const AhmParams& p, std::uint64_t seed,
                          int max_attempts = 1000);

// "experiment1" or "experiment2".
AhmParams preset(const std::string& name);

}  // namespace pdu
