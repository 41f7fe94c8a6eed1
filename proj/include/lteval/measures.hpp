#pragma once

#include <vector>

#include "lteval/types.hpp"

namespace lteval {

/// Intersection-over-union of two optional regions; 0 whenever either side
/// is absent or the rectangles are disjoint, 1 iff both are present and
/// geometrically identical.
double overlap(const std::optional<Box>& a, const std::optional<Box>& b);

/// Harmonic mean of precision and recall; 0 when both are 0.
double f_score(double pr, double re);

struct PrRe {
    double pr = 0.0;
    double re = 0.0;
};

/// Detection-style precision/recall at a fixed confidence threshold and a
/// fixed overlap threshold. A frame counts as a match when the surviving
/// prediction and the ground truth are both present and their overlap
/// reaches tau_omega. Frame 0 carries the initialization and is never
/// scored.
PrRe pr_re_thresholded(const TrackerRun& run, const SequenceTruth& truth, double tau_theta,
                       double tau_omega);

/// Overlap-integrated tracking precision/recall and their F-score at a
/// confidence threshold: precision is the mean overlap over frames whose
/// prediction survives the threshold, recall the mean overlap over frames
/// with a ground-truth region (suppressed predictions contribute 0).
PrPoint pr_re_at(const TrackerRun& run, const SequenceTruth& truth, double tau_theta);

/// Uniform confidence-threshold sweep spanning the pooled scores of every
/// present prediction across the runs. The lowest threshold sits a hair
/// below the minimum score so it retains every prediction; the highest
/// equals the maximum score.
std::vector<double> threshold_axis(const std::vector<TrackerRun>& runs, std::size_t n);

/// One PrPoint per axis entry; the axis must be strictly increasing.
PrCurve sequence_curve(const TrackerRun& run, const SequenceTruth& truth,
                       const std::vector<double>& axis);

/// Pointwise arithmetic mean of precision and recall across sequences.
/// F is recomputed from the averaged values, not averaged itself; the
/// curves must share one threshold axis.
PrCurve average_curves(const std::vector<PrCurve>& curves);

struct MaxF {
    double f = 0.0;
    double tau = 0.0;
};

/// Highest F on the curve and the threshold attaining it; ties resolve to
/// the lowest threshold.
MaxF max_f(const PrCurve& curve);

} // namespace lteval
