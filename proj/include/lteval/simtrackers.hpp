#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lteval/types.hpp"

namespace lteval {

/// The simulated tracker taxonomy, from plain short-term behavior to
/// explicit re-detection:
///   oracle     - reports the ground truth when visible, absence otherwise
///   st0_drift  - follows the target until it vanishes or jumps, then stays
///                frozen on the last box forever
///   st0_jitter - always reports a box; on visible frames the box is offset
///                to hit a prescribed overlap, on absent frames it repeats
///                the stale box
///   lt0        - detects its own failure and reports absence, but can only
///                reattach when the target reappears over its frozen box
///   lt1        - like lt0, plus image-wide re-detection that reacquires the
///                target a fixed number of frames after it reappears
enum class SimKind {
    oracle,
    st0_drift,
    st0_jitter,
    lt0,
    lt1,
};

std::string sim_kind_name(SimKind kind);
std::optional<SimKind> sim_kind_from_name(std::string_view name);

struct SimModel {
    SimKind kind = SimKind::oracle;
    /// Target overlap for each visible frame, cycled; 1.0 means the exact
    /// ground-truth box. The offset realizing an overlap is solved in
    /// closed form, so the achieved overlaps are exact.
    std::vector<double> overlap_targets = {1.0};
    /// When positive, shifts by this many pixels instead of solving the
    /// offset from overlap_targets.
    double jitter_px = 0.0;
    double conf_visible = 1.0;
    double conf_lost = 0.1;
    std::size_t redetect_delay = 0;
    /// Selects the pseudo-random shift directions; identical
    /// (model, sequence) inputs always yield identical runs.
    std::uint64_t seed = 0;
};

TrackerRun simulate(const SimModel& model, const SequenceTruth& truth);

} // namespace lteval
