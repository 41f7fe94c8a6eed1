#include "lteval/speed.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "lteval/text.hpp"

namespace lteval {

namespace {

double median_of_slowest(const std::vector<double>& times) {
    // times excludes the initialization frame
    std::vector<double> sorted(times);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const std::size_t k = (times.size() + 9) / 10;  // ceil(0.1 * n), at least 1
    if (k % 2 == 1) {
        return sorted[k / 2];
    }
    return (sorted[k / 2 - 1] + sorted[k / 2]) / 2.0;
}

} // namespace

SpeedStats speed_stats(const std::vector<std::vector<double>>& per_sequence_times) {
    if (per_sequence_times.empty()) {
        throw std::invalid_argument("no sequences to analyze");
    }
    double init_sum = 0.0;
    double max_sum = 0.0;
    std::vector<double> pooled;
    for (const auto& times : per_sequence_times) {
        if (times.empty()) {
            throw std::invalid_argument("sequence with no frame times");
        }
        if (times.size() < 2) {
            throw std::invalid_argument("sequence with only the initialization frame");
        }
        init_sum += times.front();
        const std::vector<double> rest(times.begin() + 1, times.end());
        max_sum += median_of_slowest(rest);
        pooled.insert(pooled.end(), rest.begin(), rest.end());
    }
    // Summing in sorted order keeps the result independent of frame order.
    std::sort(pooled.begin(), pooled.end());
    double frame_sum = 0.0;
    for (double t : pooled) {
        frame_sum += t;
    }
    const auto n_seq = static_cast<double>(per_sequence_times.size());
    SpeedStats stats;
    stats.init_ms = init_sum / n_seq;
    stats.max_ms = max_sum / n_seq;
    stats.avg_ms = frame_sum / static_cast<double>(pooled.size());
    stats.fps = stats.avg_ms > 0.0 ? 1000.0 / stats.avg_ms
                                   : std::numeric_limits<double>::infinity();
    stats.speed_class = classify_speed(stats.fps);
    return stats;
}

SpeedClass classify_speed(double fps) {
    if (fps > 15.0) {
        return SpeedClass::fast;
    }
    if (fps >= 1.0) {
        return SpeedClass::moderate;
    }
    return SpeedClass::slow;
}

std::string speed_class_name(SpeedClass cls) {
    switch (cls) {
    case SpeedClass::fast: return "fast";
    case SpeedClass::moderate: return "moderate";
    case SpeedClass::slow: return "slow";
    }
    return "?";
}

std::string speed_csv(const std::string& tracker, const SpeedStats& stats) {
    std::string csv = "tracker,init_ms,max_ms,avg_ms,fps,class\n";
    csv += tracker + "," + format_sig9(stats.init_ms) + "," + format_sig9(stats.max_ms) + "," +
           format_sig9(stats.avg_ms) + "," + format_sig9(stats.fps) + "," +
           speed_class_name(stats.speed_class) + "\n";
    return csv;
}

} // namespace lteval
