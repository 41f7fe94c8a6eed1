#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lteval/types.hpp"

namespace lteval {

/// 8-bit RGB raster, row-major.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    [[nodiscard]] bool valid() const {
        return width > 0 && height > 0 &&
               pixels.size() == static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3;
    }
    friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

// Binary portable pixmap (P6, maxval 255).
RasterImage decode_ppm(const std::string& data, const std::string& file = {});
std::string encode_ppm(const RasterImage& image);
RasterImage read_ppm(const std::filesystem::path& path);
void write_ppm(const RasterImage& image, const std::filesystem::path& path);

/// Zero-based index of the first frame with the displaced target.
inline constexpr std::size_t redetect_displacement_frame = 5;

/// The synthetic re-detection sequence: a 3x-padded canvas whose first five
/// frames repeat the seed at the top-left; from frame 6 on, the target
/// patch moves to the bottom-right corner and its original location is
/// blanked. Frames repeat, so only the two distinct canvases are stored.
struct RedetectSequence {
    RasterImage static_frame;
    RasterImage displaced_frame;
    std::vector<FrameTruth> truth;

    [[nodiscard]] std::size_t size() const { return truth.size(); }
    [[nodiscard]] const RasterImage& frame(std::size_t t) const {
        return t < redetect_displacement_frame ? static_frame : displaced_frame;
    }
};

/// target must be integer-aligned and lie inside the seed image;
/// n_frames must exceed the five static frames.
RedetectSequence generate_redetection_sequence(const RasterImage& image, const Box& target,
                                               std::size_t n_frames);

struct RedetectOutcome {
    bool success = false;
    std::optional<std::size_t> frames_to_redetect;  // present iff success
};

/// Success iff some frame at or after the displacement reaches the overlap
/// threshold against the ground truth; latency counts frames after the
/// displacement frame.
RedetectOutcome judge_redetection(const TrackerRun& run, const std::vector<FrameTruth>& truth,
                                  double iou_threshold);

struct CampaignSummary {
    std::size_t seeds = 0;
    std::size_t successes = 0;
    std::optional<double> mean_frames;  // over successful cases only
    std::vector<RedetectOutcome> outcomes;
};

CampaignSummary redetect_campaign(const std::vector<SequenceTruth>& sequences,
                                  const std::vector<TrackerRun>& runs, double iou_threshold);

} // namespace lteval
