#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lteval/dataset_io.hpp"
#include "lteval/errors.hpp"
#include "lteval/parallel.hpp"
#include "lteval/redetect.hpp"
#include "lteval/report.hpp"
#include "lteval/simtrackers.hpp"
#include "lteval/speed.hpp"
#include "lteval/text.hpp"

namespace fs = std::filesystem;

namespace {

void make_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw lteval::IoError("cannot create " + dir.string() + ": " + ec.message());
    }
}

lteval::Box parse_target(const std::string& text) {
    const auto fields = lteval::split(text, ',');
    if (fields.size() != 4) {
        throw std::invalid_argument("--target expects x,y,w,h");
    }
    double values[4];
    for (std::size_t i = 0; i < 4; ++i) {
        const auto v = lteval::parse_double(fields[i]);
        if (!v.has_value()) {
            throw std::invalid_argument("--target expects x,y,w,h");
        }
        values[i] = *v;
    }
    return {values[0], values[1], values[2], values[3]};
}

std::vector<double> parse_overlap_list(const std::string& text) {
    std::vector<double> targets;
    for (auto field : lteval::split(text, ',')) {
        const auto v = lteval::parse_double(field);
        if (!v.has_value() || !(*v >= 0.0 && *v <= 1.0)) {
            throw std::invalid_argument("--overlap expects values in [0,1]");
        }
        targets.push_back(*v);
    }
    return targets;
}

struct EvalOptions {
    std::string dataset;
    std::string results;
    std::string tracker;
    std::size_t thresholds = 100;
    unsigned jobs = 1;
    std::string out;
};

int cmd_eval(const EvalOptions& opt) {
    const auto dataset = lteval::load_dataset(opt.dataset);
    const auto runs = lteval::load_results(fs::path(opt.results) / opt.tracker, dataset);
    auto report = lteval::evaluate_tracker(dataset, runs, opt.thresholds, opt.jobs);
    report.tracker_name = opt.tracker;
    lteval::emit_report(report, opt.out);
    std::cout << "tracker " << opt.tracker << ": f_star " << lteval::format_sig9(report.f_star)
              << " at tau " << lteval::format_sig9(report.tau_star) << " over "
              << report.per_sequence.size() << " sequences\n";
    return 0;
}

struct RedetectGenOptions {
    std::string image;
    std::string target;
    std::size_t frames = 105;
    std::string out;
};

int cmd_redetect_gen(const RedetectGenOptions& opt) {
    const auto seed = lteval::read_ppm(opt.image);
    const auto sequence =
        lteval::generate_redetection_sequence(seed, parse_target(opt.target), opt.frames);
    make_dir(opt.out);
    for (std::size_t t = 0; t < sequence.size(); ++t) {
        char name[16];
        std::snprintf(name, sizeof(name), "%08zu.ppm", t + 1);
        lteval::write_ppm(sequence.frame(t), fs::path(opt.out) / name);
    }
    lteval::write_text_file(fs::path(opt.out) / "groundtruth.txt",
                            lteval::serialize_groundtruth(sequence.truth));
    std::cout << "wrote " << sequence.size() << " frames to " << opt.out << "\n";
    return 0;
}

struct RedetectJudgeOptions {
    std::string dataset;
    std::string results;
    std::string tracker;
    double iou = 0.5;
    unsigned jobs = 1;
    std::string out;
};

int cmd_redetect_judge(const RedetectJudgeOptions& opt) {
    const auto dataset = lteval::load_dataset(opt.dataset);
    const auto runs = lteval::load_results(fs::path(opt.results) / opt.tracker, dataset);

    std::vector<lteval::RedetectOutcome> outcomes(dataset.size());
    lteval::parallel_for(dataset.size(), opt.jobs, [&](std::size_t i) {
        outcomes[i] = lteval::judge_redetection(runs[i], dataset[i].frames, opt.iou);
    });

    std::size_t successes = 0;
    std::size_t frames_total = 0;
    std::string csv = "seq,success,frames\n";
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        csv += dataset[i].name;
        csv += outcomes[i].success ? ",1," : ",0,";
        if (outcomes[i].success) {
            ++successes;
            frames_total += *outcomes[i].frames_to_redetect;
            csv += std::to_string(*outcomes[i].frames_to_redetect);
        }
        csv += '\n';
    }
    make_dir(opt.out);
    lteval::write_text_file(fs::path(opt.out) / "redetect.csv", csv);

    std::cout << "success " << successes << "/" << dataset.size() << "\n";
    if (successes > 0) {
        const double mean =
            static_cast<double>(frames_total) / static_cast<double>(successes);
        std::cout << "mean_frames " << lteval::format_sig9(mean) << "\n";
    } else {
        std::cout << "mean_frames -\n";
    }
    return 0;
}

struct SpeedOptions {
    std::string dataset;
    std::string results;
    std::string tracker;
    unsigned jobs = 1;
    std::string out;
};

int cmd_speed(const SpeedOptions& opt) {
    const auto dataset = lteval::load_dataset(opt.dataset);
    const fs::path tracker_dir = fs::path(opt.results) / opt.tracker;
    std::vector<std::vector<double>> times(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto path = tracker_dir / (dataset[i].name + "_time.txt");
        if (!fs::exists(path)) {
            throw lteval::AlignmentError("missing timing file for sequence '" + dataset[i].name +
                                         "': " + path.string());
        }
        times[i] = lteval::parse_times(lteval::read_text_file(path), path.string());
        if (times[i].size() != dataset[i].frames.size()) {
            throw lteval::AlignmentError("timing file " + path.string() + " has " +
                                         std::to_string(times[i].size()) +
                                         " entries, sequence '" + dataset[i].name + "' has " +
                                         std::to_string(dataset[i].frames.size()) + " frames");
        }
    }
    const auto stats = lteval::speed_stats(times);
    make_dir(opt.out);
    lteval::write_text_file(fs::path(opt.out) / "speed.csv", lteval::speed_csv(opt.tracker, stats));
    std::cout << "tracker " << opt.tracker << ": " << lteval::format_sig9(stats.fps) << " fps ("
              << lteval::speed_class_name(stats.speed_class) << ")\n";
    return 0;
}

struct SimulateOptions {
    std::string dataset;
    std::string model;
    std::string overlap = "1";
    double jitter_px = 0.0;
    double conf_visible = 1.0;
    double conf_lost = 0.1;
    std::size_t delay = 0;
    std::uint64_t seed = 0;
    std::string name;
    unsigned jobs = 1;
    std::string out;
};

int cmd_simulate(const SimulateOptions& opt) {
    const auto dataset = lteval::load_dataset(opt.dataset);
    lteval::SimModel model;
    const auto kind = lteval::sim_kind_from_name(opt.model);
    if (!kind.has_value()) {
        throw std::invalid_argument("unknown model '" + opt.model + "'");
    }
    model.kind = *kind;
    model.overlap_targets = parse_overlap_list(opt.overlap);
    model.jitter_px = opt.jitter_px;
    model.conf_visible = opt.conf_visible;
    model.conf_lost = opt.conf_lost;
    model.redetect_delay = opt.delay;
    model.seed = opt.seed;

    const std::string name = opt.name.empty() ? opt.model : opt.name;
    std::vector<lteval::TrackerRun> runs(dataset.size());
    lteval::parallel_for(dataset.size(), opt.jobs,
                         [&](std::size_t i) { runs[i] = lteval::simulate(model, dataset[i]); });

    const fs::path out_dir = fs::path(opt.out) / name;
    make_dir(out_dir);
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        lteval::write_text_file(out_dir / (dataset[i].name + ".txt"),
                                lteval::serialize_results(runs[i].frames));
    }
    std::cout << "wrote " << dataset.size() << " runs to " << out_dir.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Long-term tracking evaluation toolkit"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    auto* eval = app.add_subcommand("eval", "Evaluate a tracker's results over a dataset");
    eval->add_option("--dataset", eval_opt.dataset, "Dataset root directory")->required();
    eval->add_option("--results", eval_opt.results, "Results root directory")->required();
    eval->add_option("--tracker", eval_opt.tracker, "Tracker name (results subdirectory)")->required();
    eval->add_option("--thresholds", eval_opt.thresholds, "Confidence threshold samples")
        ->capture_default_str()
        ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(1000000)));
    eval->add_option("--jobs", eval_opt.jobs, "Worker threads")->capture_default_str();
    eval->add_option("--out", eval_opt.out, "Output directory")->required();

    auto* redetect = app.add_subcommand("redetect", "Synthetic re-detection experiment");
    redetect->require_subcommand(1);

    RedetectGenOptions gen_opt;
    auto* gen = redetect->add_subcommand("gen", "Generate a padded-displacement sequence");
    gen->add_option("--image", gen_opt.image, "Seed frame (binary P6 pixmap)")->required();
    gen->add_option("--target", gen_opt.target, "Target box as x,y,w,h (integer pixels)")->required();
    gen->add_option("--frames", gen_opt.frames, "Total frame count (5 static + displaced)")
        ->capture_default_str()
        ->check(CLI::Range(static_cast<std::size_t>(6), static_cast<std::size_t>(1000000)));
    gen->add_option("--out", gen_opt.out, "Output sequence directory")->required();

    RedetectJudgeOptions judge_opt;
    auto* judge = redetect->add_subcommand("judge", "Judge re-detection success and latency");
    judge->add_option("--dataset", judge_opt.dataset, "Generated sequences root")->required();
    judge->add_option("--results", judge_opt.results, "Results root directory")->required();
    judge->add_option("--tracker", judge_opt.tracker, "Tracker name")->required();
    judge->add_option("--iou", judge_opt.iou, "Success overlap threshold")
        ->capture_default_str()
        ->check(CLI::Range(1e-9, 1.0));
    judge->add_option("--jobs", judge_opt.jobs, "Worker threads")->capture_default_str();
    judge->add_option("--out", judge_opt.out, "Output directory")->required();

    SpeedOptions speed_opt;
    auto* speed = app.add_subcommand("speed", "Per-frame speed statistics from timing files");
    speed->add_option("--dataset", speed_opt.dataset, "Dataset root directory")->required();
    speed->add_option("--results", speed_opt.results, "Results root directory")->required();
    speed->add_option("--tracker", speed_opt.tracker, "Tracker name")->required();
    speed->add_option("--jobs", speed_opt.jobs, "Worker threads")->capture_default_str();
    speed->add_option("--out", speed_opt.out, "Output directory")->required();

    SimulateOptions sim_opt;
    auto* simulate = app.add_subcommand("simulate", "Write simulated tracker runs for a dataset");
    simulate->add_option("--dataset", sim_opt.dataset, "Dataset root directory")->required();
    simulate->add_option("--model", sim_opt.model, "oracle|st0_drift|st0_jitter|lt0|lt1")
        ->required()
        ->check(CLI::IsMember({"oracle", "st0_drift", "st0_jitter", "lt0", "lt1"}));
    simulate->add_option("--overlap", sim_opt.overlap, "Overlap target(s), comma-separated")
        ->capture_default_str();
    simulate->add_option("--jitter-px", sim_opt.jitter_px, "Fixed pixel offset instead of overlap targets")
        ->capture_default_str();
    simulate->add_option("--conf-visible", sim_opt.conf_visible, "Confidence while tracking")
        ->capture_default_str();
    simulate->add_option("--conf-lost", sim_opt.conf_lost, "Confidence while lost")
        ->capture_default_str();
    simulate->add_option("--delay", sim_opt.delay, "Re-detection delay in frames (lt1)")
        ->capture_default_str();
    simulate->add_option("--seed", sim_opt.seed, "Pseudo-random stream seed")->capture_default_str();
    simulate->add_option("--name", sim_opt.name, "Output tracker name (defaults to the model)");
    simulate->add_option("--jobs", sim_opt.jobs, "Worker threads")->capture_default_str();
    simulate->add_option("--out", sim_opt.out, "Results root to write into")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (eval->parsed()) {
            return cmd_eval(eval_opt);
        }
        if (gen->parsed()) {
            return cmd_redetect_gen(gen_opt);
        }
        if (judge->parsed()) {
            return cmd_redetect_judge(judge_opt);
        }
        if (speed->parsed()) {
            return cmd_speed(speed_opt);
        }
        if (simulate->parsed()) {
            return cmd_simulate(sim_opt);
        }
    } catch (const lteval::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lteval::AlignmentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const lteval::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
