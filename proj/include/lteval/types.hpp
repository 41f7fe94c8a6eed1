#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lteval {

/// Axis-aligned bounding box in pixel units, origin at the top-left corner.
struct Box {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    [[nodiscard]] double area() const { return w * h; }

    [[nodiscard]] bool valid() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(w) && std::isfinite(h) &&
               w > 0.0 && h > 0.0;
    }

    friend bool operator==(const Box&, const Box&) = default;
};

/// Ground-truth state of one frame; an absent region means the target is
/// fully occluded or out of view and must not be reported.
struct FrameTruth {
    std::optional<Box> region;
};

/// Tracker output for one frame. The region is absent when the tracker
/// reports the target as not visible; the confidence score is recorded
/// either way so the score stream stays complete.
struct FramePrediction {
    std::optional<Box> region;
    double score = 0.0;
};

/// Per-sequence visual attribute tags.
enum class AttributeCode : std::uint8_t {
    full_occlusion,     // O
    out_of_view,        // V
    partial_occlusion,  // P
    camera_motion,      // C
    fast_motion,        // F
    scale_change,       // S
    aspect_change,      // A
    viewpoint_change,   // W
    similar_objects,    // I
    deformable,         // D
};

inline constexpr std::array<AttributeCode, 10> all_attributes = {
    AttributeCode::full_occlusion, AttributeCode::out_of_view,
    AttributeCode::partial_occlusion, AttributeCode::camera_motion,
    AttributeCode::fast_motion, AttributeCode::scale_change,
    AttributeCode::aspect_change, AttributeCode::viewpoint_change,
    AttributeCode::similar_objects, AttributeCode::deformable,
};

inline constexpr char attribute_letter(AttributeCode code) {
    switch (code) {
    case AttributeCode::full_occlusion: return 'O';
    case AttributeCode::out_of_view: return 'V';
    case AttributeCode::partial_occlusion: return 'P';
    case AttributeCode::camera_motion: return 'C';
    case AttributeCode::fast_motion: return 'F';
    case AttributeCode::scale_change: return 'S';
    case AttributeCode::aspect_change: return 'A';
    case AttributeCode::viewpoint_change: return 'W';
    case AttributeCode::similar_objects: return 'I';
    case AttributeCode::deformable: return 'D';
    }
    return '?';
}

inline constexpr std::optional<AttributeCode> attribute_from_letter(char letter) {
    for (auto code : all_attributes) {
        if (attribute_letter(code) == letter) {
            return code;
        }
    }
    return std::nullopt;
}

/// Annotated sequence: per-frame ground truth plus sequence-level attributes.
/// Frame 0 always carries a region (the tracker is initialized on it).
struct SequenceTruth {
    std::string name;
    std::vector<FrameTruth> frames;
    std::set<AttributeCode> attributes;
    int width = 0;
    int height = 0;
};

/// One tracker's output over a full sequence, frame-aligned with the truth.
/// times_ms, when present, holds per-frame processing durations.
struct TrackerRun {
    std::string sequence_name;
    std::vector<FramePrediction> frames;
    std::optional<std::vector<double>> times_ms;
};

/// One sample of the precision/recall/F curve at confidence threshold tau_theta.
struct PrPoint {
    double tau_theta = 0.0;
    double pr = 0.0;
    double re = 0.0;
    double f = 0.0;
    std::size_t n_p = 0;  // frames whose prediction survives the threshold
    std::size_t n_g = 0;  // frames with a ground-truth region
};

/// Curve samples ordered by strictly increasing tau_theta.
struct PrCurve {
    std::vector<PrPoint> points;

    [[nodiscard]] bool empty() const { return points.empty(); }
    [[nodiscard]] std::size_t size() const { return points.size(); }
};

} // namespace lteval
