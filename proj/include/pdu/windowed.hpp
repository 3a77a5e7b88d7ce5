#pragma once

#include <cstddef>
#include <vector>

#include "pdu/types.hpp"
#include "pdu/unwind.hpp"

namespace pdu {

// Taper supported on [-half_support_s, half_support_s] with sin^2/cos^2 ramps
// of length taper_s at each end and a flat top of 1 between them.
struct WindowSpec {
    double half_support_s = 0.25;  // T
    double taper_s = 0.0625;       // B, must satisfy 0 < B < T

    void validate() const;
};

double taper_window(const WindowSpec& spec, double t_from_center_s);

struct Segment {
    double start_s = 0.0;
    double end_s = 0.0;
    // global index of the first segment sample; negative for the leading
    // boundary window, whose out-of-range part reads edge-reflected data
    long long start_index = 0;
    std::vector<double> window_samples;  // taper at the covered samples

    std::size_t size() const { return window_samples.size(); }
};

// Overlapping cover of [0, duration] whose windows sum to 1 everywhere;
// consecutive segments overlap by exactly taper_s seconds. Boundary windows
// keep their full support; samples outside [0, duration) are served by
// reflecting the signal at its edges (the same symmetrization as
// flip_periodize).
struct SegmentPlan {
    WindowSpec spec;
    double duration_s = 0.0;
    double sample_rate_hz = 1.0;
    std::vector<Segment> segments;
};

SegmentPlan build_partition(const WindowSpec& spec, double duration_s,
                            double sample_rate_hz);

// Windowed restrictions f(t) * w_j(t) over each segment, reindexed onto the
// segment's own grid.
std::vector<RealSignal> segment_and_dilate(const RealSignal& s,
                                           const SegmentPlan& plan);

// First per-segment PDU component of every windowed piece, mapped back to
// global time and summed over overlaps. Complex (analytic) values aligned
// with s.samples.
CircleSignal extract_component(const RealSignal& s, const SegmentPlan& plan,
                               const PduConfig& cfg);

// Iterates extract_component on the running real residual n_components times.
// The trend field is identically zero; per-segment trends remain in the
// residual.
PduDecomposition windowed_decompose(const RealSignal& s, const SegmentPlan& plan,
                                    const PduConfig& cfg, int n_components);

enum class DecomposeStrategy { plain, windowed };

// Antiderivative preprocessing: upsample, cumsum, remove a degree-2/3
// polynomial trend, decompose (plain or windowed), then differentiate every
// part spectrally and return to the input grid.
PduDecomposition cumsum_decompose(const RealSignal& s, const PduConfig& cfg,
                                  DecomposeStrategy strategy,
                                  const WindowSpec* window, int detrend_degree);

}  // namespace pdu
