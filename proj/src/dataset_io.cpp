#include "lteval/dataset_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <system_error>

#include "lteval/errors.hpp"
#include "lteval/text.hpp"

namespace fs = std::filesystem;

namespace lteval {

namespace {

double parse_field(std::string_view token, const std::string& file, std::size_t lineno,
                   const char* what) {
    const auto value = parse_double(token);
    if (!value.has_value()) {
        throw ParseError(file, lineno, std::string("malformed ") + what + " '" +
                                           std::string(trim(token)) + "'");
    }
    return *value;
}

Box parse_box_fields(std::string_view fx, std::string_view fy, std::string_view fw,
                     std::string_view fh, const std::string& file, std::size_t lineno) {
    Box box;
    box.x = parse_field(fx, file, lineno, "number");
    box.y = parse_field(fy, file, lineno, "number");
    box.w = parse_field(fw, file, lineno, "number");
    box.h = parse_field(fh, file, lineno, "number");
    if (!std::isfinite(box.x) || !std::isfinite(box.y) || !std::isfinite(box.w) ||
        !std::isfinite(box.h)) {
        throw ParseError(file, lineno, "non-finite box value");
    }
    if (box.w <= 0.0 || box.h <= 0.0) {
        throw ParseError(file, lineno, "non-positive box size");
    }
    return box;
}

bool all_nan(const std::vector<std::string_view>& fields, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        if (!is_nan_token(fields[i])) {
            return false;
        }
    }
    return true;
}

std::string box_line(const Box& box) {
    return format_compact(box.x) + "," + format_compact(box.y) + "," + format_compact(box.w) +
           "," + format_compact(box.h);
}

} // namespace

std::vector<FrameTruth> parse_groundtruth(std::string_view text, const std::string& file) {
    std::vector<FrameTruth> frames;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const auto fields = split(lines[i], ',');
        if (fields.size() != 4) {
            throw ParseError(file, lineno,
                             "expected 4 fields, got " + std::to_string(fields.size()));
        }
        FrameTruth frame;
        if (!all_nan(fields, 4)) {
            frame.region = parse_box_fields(fields[0], fields[1], fields[2], fields[3], file, lineno);
        }
        frames.push_back(frame);
    }
    return frames;
}

std::vector<FramePrediction> parse_results(std::string_view text, const std::string& file) {
    std::vector<FramePrediction> frames;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const auto fields = split(lines[i], ',');
        if (fields.size() != 5) {
            throw ParseError(file, lineno,
                             "expected 5 fields, got " + std::to_string(fields.size()));
        }
        FramePrediction frame;
        if (!all_nan(fields, 4)) {
            frame.region = parse_box_fields(fields[0], fields[1], fields[2], fields[3], file, lineno);
        }
        frame.score = parse_field(fields[4], file, lineno, "score");
        if (!std::isfinite(frame.score)) {
            throw ParseError(file, lineno, "non-finite score");
        }
        frames.push_back(frame);
    }
    return frames;
}

std::set<AttributeCode> parse_attributes(std::string_view text, const std::string& file) {
    std::set<AttributeCode> codes;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        if (trim(lines[i]).empty()) {
            continue;
        }
        for (auto raw : split(lines[i], ',')) {
            const auto token = trim(raw);
            if (token.empty()) {
                throw ParseError(file, lineno, "empty attribute code");
            }
            if (token.size() != 1) {
                throw ParseError(file, lineno,
                                 "unknown attribute code '" + std::string(token) + "'");
            }
            const auto code = attribute_from_letter(token[0]);
            if (!code.has_value()) {
                throw ParseError(file, lineno,
                                 "unknown attribute code '" + std::string(token) + "'");
            }
            codes.insert(*code);
        }
    }
    return codes;
}

std::vector<double> parse_times(std::string_view text, const std::string& file) {
    std::vector<double> times;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const double value = parse_field(lines[i], file, lineno, "frame time");
        if (!std::isfinite(value)) {
            throw ParseError(file, lineno, "non-finite frame time");
        }
        if (value < 0.0) {
            throw ParseError(file, lineno, "negative frame time");
        }
        times.push_back(value);
    }
    return times;
}

std::string serialize_groundtruth(const std::vector<FrameTruth>& frames) {
    std::string out;
    for (const auto& frame : frames) {
        out += frame.region.has_value() ? box_line(*frame.region) : "nan,nan,nan,nan";
        out += '\n';
    }
    return out;
}

std::string serialize_results(const std::vector<FramePrediction>& frames) {
    std::string out;
    for (const auto& frame : frames) {
        out += frame.region.has_value() ? box_line(*frame.region) : "nan,nan,nan,nan";
        out += ',';
        out += format_compact(frame.score);
        out += '\n';
    }
    return out;
}

std::string serialize_times(const std::vector<double>& times_ms) {
    std::string out;
    for (double t : times_ms) {
        out += format_compact(t);
        out += '\n';
    }
    return out;
}

std::string read_text_file(const fs::path& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream.is_open()) {
        throw IoError("cannot open " + path.string());
    }
    std::string content((std::istreambuf_iterator<char>(stream)), std::istreambuf_iterator<char>());
    if (stream.bad()) {
        throw IoError("cannot read " + path.string());
    }
    return content;
}

void write_text_file(const fs::path& path, std::string_view content) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream.is_open()) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    stream.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!stream.good()) {
        throw IoError("cannot write " + path.string());
    }
}

std::vector<SequenceTruth> load_dataset(const fs::path& root) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw IoError("dataset root is not a directory: " + root.string());
    }
    std::vector<fs::path> dirs;
    try {
        for (const auto& entry : fs::directory_iterator(root)) {
            if (entry.is_directory()) {
                dirs.push_back(entry.path());
            }
        }
    } catch (const fs::filesystem_error& e) {
        throw IoError("cannot list " + root.string() + ": " + e.what());
    }
    std::sort(dirs.begin(), dirs.end());

    std::vector<SequenceTruth> dataset;
    for (const auto& dir : dirs) {
        const auto gt_path = dir / "groundtruth.txt";
        if (!fs::exists(gt_path)) {
            throw IoError("missing groundtruth file: " + gt_path.string());
        }
        SequenceTruth seq;
        seq.name = dir.filename().string();
        seq.frames = parse_groundtruth(read_text_file(gt_path), gt_path.string());
        if (seq.frames.empty()) {
            throw ParseError(gt_path.string(), 0, "sequence has no frames");
        }
        if (!seq.frames.front().region.has_value()) {
            throw ParseError(gt_path.string(), 1, "first frame must carry a ground-truth region");
        }
        const auto attr_path = dir / "attributes.txt";
        if (fs::exists(attr_path)) {
            seq.attributes = parse_attributes(read_text_file(attr_path), attr_path.string());
        }
        double max_x = 0.0;
        double max_y = 0.0;
        for (const auto& frame : seq.frames) {
            if (frame.region.has_value()) {
                max_x = std::max(max_x, frame.region->x + frame.region->w);
                max_y = std::max(max_y, frame.region->y + frame.region->h);
            }
        }
        seq.width = static_cast<int>(std::ceil(max_x));
        seq.height = static_cast<int>(std::ceil(max_y));
        dataset.push_back(std::move(seq));
    }
    if (dataset.empty()) {
        throw IoError("no sequences found under " + root.string());
    }
    return dataset;
}

std::vector<TrackerRun> load_results(const fs::path& tracker_dir,
                                     const std::vector<SequenceTruth>& dataset) {
    std::vector<TrackerRun> runs;
    runs.reserve(dataset.size());
    for (const auto& seq : dataset) {
        const auto path = tracker_dir / (seq.name + ".txt");
        if (!fs::exists(path)) {
            throw AlignmentError("missing results for sequence '" + seq.name + "': " +
                                 path.string());
        }
        TrackerRun run;
        run.sequence_name = seq.name;
        run.frames = parse_results(read_text_file(path), path.string());
        if (run.frames.size() != seq.frames.size()) {
            throw AlignmentError("results " + path.string() + " have " +
                                 std::to_string(run.frames.size()) + " lines, sequence '" +
                                 seq.name + "' has " + std::to_string(seq.frames.size()) +
                                 " frames");
        }
        const auto times_path = tracker_dir / (seq.name + "_time.txt");
        if (fs::exists(times_path)) {
            auto times = parse_times(read_text_file(times_path), times_path.string());
            if (times.size() != seq.frames.size()) {
                throw AlignmentError("timing file " + times_path.string() + " has " +
                                     std::to_string(times.size()) + " entries, sequence '" +
                                     seq.name + "' has " + std::to_string(seq.frames.size()) +
                                     " frames");
            }
            run.times_ms = std::move(times);
        }
        runs.push_back(std::move(run));
    }
    return runs;
}

} // namespace lteval
