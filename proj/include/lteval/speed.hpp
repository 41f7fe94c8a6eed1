#pragma once

#include <string>
#include <vector>

namespace lteval {

enum class SpeedClass {
    fast,      // > 15 fps
    moderate,  // 1..15 fps inclusive
    slow,      // < 1 fps
};

std::string speed_class_name(SpeedClass cls);

struct SpeedStats {
    double init_ms = 0.0;  // first-frame time, mean over sequences
    double max_ms = 0.0;   // median of each sequence's slowest 10%, mean over sequences
    double avg_ms = 0.0;   // mean over every non-initialization frame of the dataset
    double fps = 0.0;      // 1000 / avg_ms
    SpeedClass speed_class = SpeedClass::slow;
};

/// Frame 0 of every sequence is the initialization frame; it feeds init_ms
/// only. The slowest-10% count is ceil(0.1 * n) of the n remaining frames,
/// and the median of an even-sized set is the mean of its two central
/// values.
SpeedStats speed_stats(const std::vector<std::vector<double>>& per_sequence_times);

SpeedClass classify_speed(double fps);

/// One-row speed.csv content (header + data row).
std::string speed_csv(const std::string& tracker, const SpeedStats& stats);

} // namespace lteval
