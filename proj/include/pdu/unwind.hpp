#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdu/types.hpp"

namespace pdu {

struct PduConfig {
    int lowpass_order = 5;             // polynomial order of the removed trend/AM
    int n_components = 2;
    double epsilon = 1e-6;             // relative to max|g| in each factorization
    std::size_t upsample_factor = 16;
    double residual_energy_stop = 1e-4;  // fraction of input energy

    void validate() const;
};

// Ordered unwinding expansion: input = trend + sum components + residual.
struct PduDecomposition {
    CircleSignal trend;
    std::vector<CircleSignal> components;        // amplitude * unimodular part
    std::vector<CircleSignal> amplitudes;        // low-pass of each outer factor
    std::vector<CircleSignal> unimodular_parts;  // accumulated inner products
    CircleSignal residual;

    std::size_t n_components() const { return components.size(); }
};

// Keeps Fourier coefficients 0..order, zeroes all others.
CircleSignal lowpass(const CircleSignal& f, int order);

struct UnwindStep {
    CircleSignal am;      // low-pass part removed from g
    CircleSignal inner;   // unimodular factor of g - am
    CircleSignal next_g;  // outer factor of g - am
};

// One unwinding step; nullopt when g - lowpass(g) is numerically zero
// (converged), which callers treat as termination.
std::optional<UnwindStep> unwind_step(const CircleSignal& g, int lowpass_order,
                                      double epsilon);

// Iterated unwinding of a boundary signal.
PduDecomposition decompose(const CircleSignal& f, const PduConfig& cfg);

// Partial sum trend + components[0..k).
CircleSignal reconstruct(const PduDecomposition& d, std::size_t k);

// Front end for real signals: flip-periodize, project to the analytic signal,
// upsample, decompose, then map every part back to the input grid. The
// returned CircleSignals hold complex values aligned with s.samples.
PduDecomposition decompose_real(const RealSignal& s, const PduConfig& cfg);

}  // namespace pdu
