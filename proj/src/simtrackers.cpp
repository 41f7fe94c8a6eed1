#include "lteval/simtrackers.hpp"

#include <cmath>
#include <stdexcept>

#include "lteval/measures.hpp"

namespace lteval {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Shift direction per visible frame: 0/1 horizontal, 2/3 vertical.
Box jittered(const Box& gt, const SimModel& model, std::size_t index) {
    const auto dir = splitmix64(model.seed * 0x9e3779b97f4a7c15ULL + index) & 3;
    double dx = 0.0;
    double dy = 0.0;
    if (model.jitter_px > 0.0) {
        (dir < 2 ? dx : dy) = model.jitter_px;
    } else {
        const double r = model.overlap_targets[index % model.overlap_targets.size()];
        if (r >= 1.0) {
            return gt;
        }
        // offset d shifts the box along one axis: IoU = (s - d) / (s + d)
        // with s the box extent on that axis, so d = s (1 - r) / (1 + r).
        if (dir < 2) {
            dx = gt.w * (1.0 - r) / (1.0 + r);
        } else {
            dy = gt.h * (1.0 - r) / (1.0 + r);
        }
    }
    if (dir & 1) {
        dx = -dx;
        dy = -dy;
    }
    return {gt.x + dx, gt.y + dy, gt.w, gt.h};
}

void validate(const SimModel& model, const SequenceTruth& truth) {
    if (truth.frames.empty() || !truth.frames.front().region.has_value()) {
        throw std::invalid_argument("sequence must start with a visible target");
    }
    if (model.overlap_targets.empty()) {
        throw std::invalid_argument("overlap_targets must not be empty");
    }
    for (double r : model.overlap_targets) {
        if (!(r >= 0.0 && r <= 1.0)) {
            throw std::invalid_argument("overlap targets must lie in [0,1]");
        }
    }
    if (!(model.jitter_px >= 0.0) || !std::isfinite(model.jitter_px)) {
        throw std::invalid_argument("jitter_px must be a finite non-negative value");
    }
    if (!std::isfinite(model.conf_visible) || !std::isfinite(model.conf_lost)) {
        throw std::invalid_argument("confidence values must be finite");
    }
}

TrackerRun make_run(const SequenceTruth& truth) {
    TrackerRun run;
    run.sequence_name = truth.name;
    run.frames.reserve(truth.frames.size());
    return run;
}

TrackerRun simulate_oracle(const SimModel& model, const SequenceTruth& truth) {
    auto run = make_run(truth);
    for (const auto& frame : truth.frames) {
        run.frames.push_back({frame.region, model.conf_visible});
    }
    return run;
}

TrackerRun simulate_st0_drift(const SimModel& model, const SequenceTruth& truth) {
    auto run = make_run(truth);
    Box held = *truth.frames.front().region;
    bool lost = false;
    run.frames.push_back({held, model.conf_visible});
    for (std::size_t t = 1; t < truth.frames.size(); ++t) {
        const auto& gt = truth.frames[t].region;
        if (!lost) {
            if (!gt.has_value() || overlap(gt, held) == 0.0) {
                lost = true;  // vanished or jumped beyond the search range
            } else {
                held = *gt;
            }
        }
        run.frames.push_back({held, model.conf_visible});
    }
    return run;
}

TrackerRun simulate_st0_jitter(const SimModel& model, const SequenceTruth& truth) {
    auto run = make_run(truth);
    Box held = *truth.frames.front().region;
    std::size_t visible = 0;
    run.frames.push_back({held, model.conf_visible});
    for (std::size_t t = 1; t < truth.frames.size(); ++t) {
        const auto& gt = truth.frames[t].region;
        if (gt.has_value()) {
            held = jittered(*gt, model, visible++);
        }
        run.frames.push_back({held, model.conf_visible});
    }
    return run;
}

TrackerRun simulate_lt(const SimModel& model, const SequenceTruth& truth, bool redetects) {
    auto run = make_run(truth);
    Box last_pred = *truth.frames.front().region;
    Box frozen = last_pred;
    std::optional<Box> prev_gt = truth.frames.front().region;
    bool lost = false;
    std::size_t visible = 0;
    std::size_t streak = 0;  // consecutive visible frames since the target reappeared
    run.frames.push_back({last_pred, model.conf_visible});
    for (std::size_t t = 1; t < truth.frames.size(); ++t) {
        const auto& gt = truth.frames[t].region;
        if (!lost) {
            if (!gt.has_value() || overlap(gt, prev_gt) == 0.0) {
                lost = true;
                frozen = last_pred;
                streak = 0;
            } else {
                last_pred = jittered(*gt, model, visible++);
                run.frames.push_back({last_pred, model.conf_visible});
                prev_gt = gt;
                continue;
            }
        }
        bool reacquired = false;
        if (gt.has_value()) {
            ++streak;
            if (overlap(gt, std::optional<Box>(frozen)) > 0.0) {
                reacquired = true;  // target reappeared over the frozen box
            } else if (redetects && streak > model.redetect_delay) {
                reacquired = true;
            }
        } else {
            streak = 0;
        }
        if (reacquired) {
            lost = false;
            streak = 0;
            last_pred = jittered(*gt, model, visible++);
            run.frames.push_back({last_pred, model.conf_visible});
        } else {
            run.frames.push_back({std::nullopt, model.conf_lost});
        }
        prev_gt = gt;
    }
    return run;
}

} // namespace

std::string sim_kind_name(SimKind kind) {
    switch (kind) {
    case SimKind::oracle: return "oracle";
    case SimKind::st0_drift: return "st0_drift";
    case SimKind::st0_jitter: return "st0_jitter";
    case SimKind::lt0: return "lt0";
    case SimKind::lt1: return "lt1";
    }
    return "?";
}

std::optional<SimKind> sim_kind_from_name(std::string_view name) {
    for (auto kind : {SimKind::oracle, SimKind::st0_drift, SimKind::st0_jitter, SimKind::lt0,
                      SimKind::lt1}) {
        if (name == sim_kind_name(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

TrackerRun simulate(const SimModel& model, const SequenceTruth& truth) {
    validate(model, truth);
    switch (model.kind) {
    case SimKind::oracle: return simulate_oracle(model, truth);
    case SimKind::st0_drift: return simulate_st0_drift(model, truth);
    case SimKind::st0_jitter: return simulate_st0_jitter(model, truth);
    case SimKind::lt0: return simulate_lt(model, truth, false);
    case SimKind::lt1: return simulate_lt(model, truth, true);
    }
    throw std::invalid_argument("unknown simulator kind");
}

} // namespace lteval
