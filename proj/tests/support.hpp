#pragma once

#include <cstdlib>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "lteval/dataset_io.hpp"
#include "lteval/text.hpp"
#include "lteval/types.hpp"

namespace support {

namespace fs = std::filesystem;

// --- hand fixture ----------------------------------------------------------
// Frame 0 is the initialization frame. Scored frames 1..5: the target is
// visible on 1..3 and gone on 4..5; the run predicts every frame with
// confidences 0.9..0.5 and overlaps [1, 0.5, 0.5, 0, 0] against the truth.

inline lteval::SequenceTruth five_frame_truth() {
    lteval::SequenceTruth seq;
    seq.name = "fixture";
    const lteval::Box gt{0.0, 0.0, 10.0, 10.0};
    seq.frames = {{gt}, {gt}, {gt}, {gt}, {std::nullopt}, {std::nullopt}};
    seq.width = 10;
    seq.height = 10;
    return seq;
}

inline lteval::TrackerRun five_frame_run(double init_score = 0.0) {
    lteval::TrackerRun run;
    run.sequence_name = "fixture";
    const lteval::Box exact{0.0, 0.0, 10.0, 10.0};
    const lteval::Box half{0.0, 0.0, 10.0, 5.0};  // IoU 0.5 against exact
    run.frames = {{exact, init_score}, {exact, 0.9}, {half, 0.8},
                  {half, 0.7},         {exact, 0.6}, {exact, 0.5}};
    return run;
}

// --- random fixtures --------------------------------------------------------

inline lteval::Box random_box(std::mt19937& rng) {
    std::uniform_real_distribution<double> pos(0.0, 80.0);
    std::uniform_real_distribution<double> size(1.0, 40.0);
    return {pos(rng), pos(rng), size(rng), size(rng)};
}

inline lteval::SequenceTruth random_truth(std::mt19937& rng, std::size_t min_frames = 2,
                                          std::size_t max_frames = 50) {
    std::uniform_int_distribution<std::size_t> len(min_frames, max_frames);
    std::bernoulli_distribution visible(0.7);
    lteval::SequenceTruth seq;
    seq.name = "rand";
    seq.frames.resize(len(rng));
    seq.frames[0].region = random_box(rng);
    for (std::size_t t = 1; t < seq.frames.size(); ++t) {
        if (visible(rng)) {
            seq.frames[t].region = random_box(rng);
        }
    }
    seq.width = 130;
    seq.height = 130;
    return seq;
}

inline lteval::TrackerRun random_run(std::mt19937& rng, const lteval::SequenceTruth& truth) {
    std::bernoulli_distribution present(0.8);
    std::bernoulli_distribution near_truth(0.5);
    std::uniform_real_distribution<double> score(0.0, 1.0);
    std::uniform_real_distribution<double> shift(-8.0, 8.0);
    lteval::TrackerRun run;
    run.sequence_name = truth.name;
    run.frames.resize(truth.frames.size());
    run.frames[0] = {truth.frames[0].region, 1.0};
    for (std::size_t t = 1; t < truth.frames.size(); ++t) {
        if (!present(rng)) {
            run.frames[t] = {std::nullopt, score(rng)};
            continue;
        }
        lteval::Box box;
        if (truth.frames[t].region.has_value() && near_truth(rng)) {
            box = *truth.frames[t].region;
            box.x += shift(rng);
            box.y += shift(rng);
        } else {
            box = random_box(rng);
        }
        run.frames[t] = {box, score(rng)};
    }
    return run;
}

// --- filesystem helpers -----------------------------------------------------

inline fs::path fresh_dir(const std::string& name) {
    const auto dir = fs::current_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

inline void write_sequence(const fs::path& dataset_root, const lteval::SequenceTruth& seq) {
    const auto dir = dataset_root / seq.name;
    fs::create_directories(dir);
    lteval::write_text_file(dir / "groundtruth.txt", lteval::serialize_groundtruth(seq.frames));
    if (!seq.attributes.empty()) {
        std::string line;
        for (auto code : seq.attributes) {
            if (!line.empty()) {
                line += ',';
            }
            line += lteval::attribute_letter(code);
        }
        lteval::write_text_file(dir / "attributes.txt", line + "\n");
    }
}

inline void write_run(const fs::path& results_root, const std::string& tracker,
                      const lteval::TrackerRun& run) {
    const auto dir = results_root / tracker;
    fs::create_directories(dir);
    lteval::write_text_file(dir / (run.sequence_name + ".txt"),
                            lteval::serialize_results(run.frames));
    if (run.times_ms.has_value()) {
        lteval::write_text_file(dir / (run.sequence_name + "_time.txt"),
                                lteval::serialize_times(*run.times_ms));
    }
}

// --- CLI driver ---------------------------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string output;
};

inline CliResult run_cli(const std::string& args, const fs::path& capture_dir) {
    static int counter = 0;
    const auto capture = capture_dir / ("cli_out_" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        std::string(LTEVAL_BIN) + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult result;
    if (status != -1 && WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    result.output = lteval::read_text_file(capture);
    return result;
}

// --- CSV readers --------------------------------------------------------------

inline std::map<std::string, std::string> read_summary(const fs::path& path) {
    std::map<std::string, std::string> out;
    const auto text = lteval::read_text_file(path);
    const auto lines = lteval::split_lines(text);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = lteval::split(lines[i], ',');
        if (fields.size() == 2) {
            out.emplace(std::string(fields[0]), std::string(fields[1]));
        }
    }
    return out;
}

struct CurveRow {
    double tau = 0.0;
    double pr = 0.0;
    double re = 0.0;
    double f = 0.0;
};

inline std::vector<CurveRow> read_curve_csv(const fs::path& path) {
    std::vector<CurveRow> rows;
    const auto text = lteval::read_text_file(path);
    const auto lines = lteval::split_lines(text);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = lteval::split(lines[i], ',');
        if (fields.size() != 4) {
            continue;
        }
        rows.push_back({*lteval::parse_double(fields[0]), *lteval::parse_double(fields[1]),
                        *lteval::parse_double(fields[2]), *lteval::parse_double(fields[3])});
    }
    return rows;
}

} // namespace support
