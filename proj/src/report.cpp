#include "lteval/report.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <system_error>
#include <unordered_map>

#include "lteval/dataset_io.hpp"
#include "lteval/errors.hpp"
#include "lteval/parallel.hpp"
#include "lteval/svg.hpp"
#include "lteval/text.hpp"

namespace fs = std::filesystem;

namespace lteval {

namespace {

std::vector<const PrCurve*> collect(const std::map<std::string, PrCurve>& per_sequence,
                                    const std::vector<std::string>& names) {
    std::vector<const PrCurve*> out;
    out.reserve(names.size());
    for (const auto& name : names) {
        out.push_back(&per_sequence.at(name));
    }
    return out;
}

PrCurve average_of(const std::vector<const PrCurve*>& curves) {
    std::vector<PrCurve> copy;
    copy.reserve(curves.size());
    for (const auto* curve : curves) {
        copy.push_back(*curve);
    }
    return average_curves(copy);
}

std::string pr_curve_csv(const PrCurve& curve) {
    std::string csv = "tau,pr,re,f\n";
    for (const auto& p : curve.points) {
        csv += format_sig9(p.tau_theta) + "," + format_sig9(p.pr) + "," + format_sig9(p.re) +
               "," + format_sig9(p.f) + "\n";
    }
    return csv;
}

std::string summary_csv(const EvalReport& report) {
    std::string csv = "key,value\n";
    csv += "f_star," + format_sig9(report.f_star) + "\n";
    csv += "tau_star," + format_sig9(report.tau_star) + "\n";
    csv += "tracker," + report.tracker_name + "\n";
    csv += "n_sequences," + std::to_string(report.per_sequence.size()) + "\n";
    csv += "n_thresholds," + std::to_string(report.axis.size()) + "\n";
    csv += "dsp," + std::to_string(report.dataset_stats.dsp) + "\n";
    csv += "adl," + format_sig9(report.dataset_stats.adl) + "\n";
    csv += "adn," + format_sig9(report.dataset_stats.adn) + "\n";
    for (const auto& [group, f] : report.groups) {
        csv += "group_" + group_label(group) + "_f_star," + format_sig9(f) + "\n";
    }
    for (auto code : all_attributes) {
        const auto it = report.attributes.find(code);
        if (it != report.attributes.end()) {
            csv += std::string("attr_") + attribute_letter(code) + "_f_star," +
                   format_sig9(it->second) + "\n";
        }
    }
    return csv;
}

} // namespace

DisappearanceRuns count_disappearances(const SequenceTruth& truth) {
    DisappearanceRuns runs;
    std::size_t current = 0;
    for (const auto& frame : truth.frames) {
        if (!frame.region.has_value()) {
            ++current;
        } else if (current > 0) {
            runs.lengths.push_back(current);
            current = 0;
        }
    }
    if (current > 0) {
        runs.lengths.push_back(current);
    }
    runs.count = runs.lengths.size();
    return runs;
}

DisappearanceStats disappearance_stats(const std::vector<SequenceTruth>& dataset) {
    DisappearanceStats stats;
    std::size_t total_length = 0;
    for (const auto& seq : dataset) {
        const auto runs = count_disappearances(seq);
        stats.dsp += runs.count;
        total_length = std::accumulate(runs.lengths.begin(), runs.lengths.end(), total_length);
    }
    stats.adl = stats.dsp > 0 ? static_cast<double>(total_length) / static_cast<double>(stats.dsp)
                              : 0.0;
    stats.adn = dataset.empty()
                    ? 0.0
                    : static_cast<double>(stats.dsp) / static_cast<double>(dataset.size());
    return stats;
}

std::string group_label(SequenceGroup group) {
    switch (group) {
    case SequenceGroup::over_ten: return "G1";
    case SequenceGroup::one_to_ten: return "G2";
    case SequenceGroup::no_disappearance: return "G3";
    }
    return "?";
}

GroupPartition group_sequences(const std::vector<SequenceTruth>& dataset) {
    GroupPartition partition;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto count = count_disappearances(dataset[i]).count;
        if (count > 10) {
            partition.over_ten.push_back(i);
        } else if (count >= 1) {
            partition.one_to_ten.push_back(i);
        } else {
            partition.no_disappearance.push_back(i);
        }
    }
    return partition;
}

EvalReport evaluate_tracker(const std::vector<SequenceTruth>& dataset,
                            const std::vector<TrackerRun>& runs, std::size_t n_thresholds,
                            unsigned jobs) {
    if (dataset.empty()) {
        throw std::invalid_argument("empty dataset");
    }
    std::unordered_map<std::string, const TrackerRun*> by_name;
    for (const auto& run : runs) {
        if (!by_name.emplace(run.sequence_name, &run).second) {
            throw AlignmentError("duplicate run for sequence '" + run.sequence_name + "'");
        }
    }
    for (const auto& run : runs) {
        const bool known = std::any_of(dataset.begin(), dataset.end(),
                                       [&](const SequenceTruth& seq) { return seq.name == run.sequence_name; });
        if (!known) {
            throw AlignmentError("run for unknown sequence '" + run.sequence_name + "'");
        }
    }

    // Name order everywhere: the report must not depend on input order.
    std::vector<std::size_t> order(dataset.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return dataset[a].name < dataset[b].name; });

    std::vector<const TrackerRun*> aligned(dataset.size(), nullptr);
    for (std::size_t i : order) {
        const auto it = by_name.find(dataset[i].name);
        if (it == by_name.end()) {
            throw AlignmentError("missing run for sequence '" + dataset[i].name + "'");
        }
        aligned[i] = it->second;
    }

    EvalReport report;
    report.axis = threshold_axis(runs, n_thresholds);

    std::vector<PrCurve> curves(dataset.size());
    parallel_for(dataset.size(), jobs, [&](std::size_t k) {
        const std::size_t i = order[k];
        curves[i] = sequence_curve(*aligned[i], dataset[i], report.axis);
    });
    for (std::size_t i : order) {
        if (!report.per_sequence.emplace(dataset[i].name, std::move(curves[i])).second) {
            throw AlignmentError("duplicate sequence name '" + dataset[i].name + "'");
        }
    }

    std::vector<std::string> all_names;
    for (std::size_t i : order) {
        all_names.push_back(dataset[i].name);
    }
    report.averaged = average_of(collect(report.per_sequence, all_names));
    const auto best = max_f(report.averaged);
    report.f_star = best.f;
    report.tau_star = best.tau;

    const auto partition = group_sequences(dataset);
    const auto group_score = [&](SequenceGroup group, const std::vector<std::size_t>& members) {
        if (members.empty()) {
            return;
        }
        std::vector<std::string> names;
        for (std::size_t i : members) {
            names.push_back(dataset[i].name);
        }
        std::sort(names.begin(), names.end());
        report.groups[group] = max_f(average_of(collect(report.per_sequence, names))).f;
    };
    group_score(SequenceGroup::over_ten, partition.over_ten);
    group_score(SequenceGroup::one_to_ten, partition.one_to_ten);
    group_score(SequenceGroup::no_disappearance, partition.no_disappearance);

    for (auto code : all_attributes) {
        std::vector<std::string> names;
        for (std::size_t i : order) {
            if (dataset[i].attributes.count(code) > 0) {
                names.push_back(dataset[i].name);
            }
        }
        if (!names.empty()) {
            report.attributes[code] = max_f(average_of(collect(report.per_sequence, names))).f;
        }
    }

    report.dataset_stats = disappearance_stats(dataset);
    return report;
}

void emit_report(const EvalReport& report, const fs::path& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
    }

    write_text_file(out_dir / "pr_curve.csv", pr_curve_csv(report.averaged));
    write_text_file(out_dir / "summary.csv", summary_csv(report));

    SvgPlot pr_plot;
    pr_plot.title = "Tracking precision-recall: " + report.tracker_name;
    pr_plot.x_label = "recall";
    pr_plot.y_label = "precision";
    for (const auto& p : report.averaged.points) {
        pr_plot.xs.push_back(p.re);
        pr_plot.ys.push_back(p.pr);
    }
    for (const auto& p : report.averaged.points) {
        if (p.tau_theta == report.tau_star) {
            pr_plot.marker = SvgMarker{p.re, p.pr, "F*=" + format_sig9(report.f_star)};
            break;
        }
    }
    write_text_file(out_dir / "pr_plot.svg", render_svg_plot(pr_plot));

    SvgPlot f_plot;
    f_plot.title = "Tracking F-score: " + report.tracker_name;
    f_plot.x_label = "confidence threshold";
    f_plot.y_label = "F-score";
    f_plot.x_min = report.averaged.points.front().tau_theta;
    f_plot.x_max = report.averaged.points.back().tau_theta;
    f_plot.normalized_top_axis = true;
    for (const auto& p : report.averaged.points) {
        f_plot.xs.push_back(p.tau_theta);
        f_plot.ys.push_back(p.f);
    }
    f_plot.marker = SvgMarker{report.tau_star, report.f_star,
                              "F*=" + format_sig9(report.f_star) + " @ " +
                                  format_sig9(report.tau_star)};
    write_text_file(out_dir / "f_plot.svg", render_svg_plot(f_plot));
}

} // namespace lteval
