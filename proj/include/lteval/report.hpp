#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lteval/measures.hpp"
#include "lteval/types.hpp"

namespace lteval {

/// Dataset-level target-disappearance statistics.
struct DisappearanceStats {
    std::size_t dsp = 0;  // total disappearance count
    double adl = 0.0;     // mean disappearance length, frames
    double adn = 0.0;     // mean disappearances per sequence
};

struct DisappearanceRuns {
    std::size_t count = 0;
    std::vector<std::size_t> lengths;
};

/// A disappearance is a maximal run of consecutive frames with no
/// ground-truth region.
DisappearanceRuns count_disappearances(const SequenceTruth& truth);

DisappearanceStats disappearance_stats(const std::vector<SequenceTruth>& dataset);

enum class SequenceGroup {
    over_ten,          // G1: more than ten disappearances
    one_to_ten,        // G2: between one and ten
    no_disappearance,  // G3: none
};

std::string group_label(SequenceGroup group);

/// Exhaustive, disjoint partition of dataset indices by disappearance count.
struct GroupPartition {
    std::vector<std::size_t> over_ten;
    std::vector<std::size_t> one_to_ten;
    std::vector<std::size_t> no_disappearance;
};

GroupPartition group_sequences(const std::vector<SequenceTruth>& dataset);

struct EvalReport {
    std::string tracker_name;
    std::vector<double> axis;
    std::map<std::string, PrCurve> per_sequence;
    PrCurve averaged;
    double f_star = 0.0;
    double tau_star = 0.0;
    std::map<SequenceGroup, double> groups;      // max-F of each non-empty group
    std::map<AttributeCode, double> attributes;  // max-F per attribute that occurs
    DisappearanceStats dataset_stats;
};

/// Runs the whole no-reset protocol for one tracker: shared threshold axis,
/// per-sequence curves, equal-weight averaged curve, the max-F ranking
/// score, and group/attribute breakdowns (each the max-F of that subset's
/// averaged curve). Deterministic regardless of sequence order or jobs.
EvalReport evaluate_tracker(const std::vector<SequenceTruth>& dataset,
                            const std::vector<TrackerRun>& runs, std::size_t n_thresholds,
                            unsigned jobs = 1);

/// Writes pr_curve.csv, summary.csv, pr_plot.svg and f_plot.svg into
/// out_dir. All numbers carry 9 significant digits.
void emit_report(const EvalReport& report, const std::filesystem::path& out_dir);

} // namespace lteval
