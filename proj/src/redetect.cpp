#include "lteval/redetect.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "lteval/errors.hpp"
#include "lteval/measures.hpp"

namespace fs = std::filesystem;

namespace lteval {

namespace {

bool integer_aligned(double v) {
    return std::isfinite(v) && v == std::floor(v);
}

// Header token reader: skips whitespace and '#' comment lines.
std::size_t next_token(const std::string& data, std::size_t pos, std::string& token,
                       const std::string& file) {
    while (pos < data.size()) {
        const char c = data[pos];
        if (c == '#') {
            while (pos < data.size() && data[pos] != '\n') {
                ++pos;
            }
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++pos;
        } else {
            break;
        }
    }
    const std::size_t start = pos;
    while (pos < data.size() && !std::isspace(static_cast<unsigned char>(data[pos]))) {
        ++pos;
    }
    token = data.substr(start, pos - start);
    if (token.empty()) {
        throw ParseError(file, 0, "truncated pixmap header");
    }
    return pos;
}

int parse_dim(const std::string& token, const std::string& file, const char* what) {
    for (char c : token) {
        if (c < '0' || c > '9') {
            throw ParseError(file, 0, std::string("malformed pixmap ") + what);
        }
    }
    long value = 0;
    try {
        value = std::stol(token);
    } catch (const std::out_of_range&) {
        value = 0;
    }
    if (value <= 0 || value > 1 << 20) {
        throw ParseError(file, 0, std::string("pixmap ") + what + " out of range");
    }
    return static_cast<int>(value);
}

void blit(RasterImage& dst, const RasterImage& src, int dst_x, int dst_y, int src_x, int src_y,
          int w, int h) {
    for (int row = 0; row < h; ++row) {
        const auto* from = src.pixels.data() +
                           (static_cast<std::size_t>(src_y + row) * src.width + src_x) * 3;
        auto* to = dst.pixels.data() +
                   (static_cast<std::size_t>(dst_y + row) * dst.width + dst_x) * 3;
        std::memcpy(to, from, static_cast<std::size_t>(w) * 3);
    }
}

void zero_rect(RasterImage& img, int x, int y, int w, int h) {
    for (int row = 0; row < h; ++row) {
        auto* to = img.pixels.data() + (static_cast<std::size_t>(y + row) * img.width + x) * 3;
        std::memset(to, 0, static_cast<std::size_t>(w) * 3);
    }
}

} // namespace

RasterImage decode_ppm(const std::string& data, const std::string& file) {
    std::string token;
    std::size_t pos = next_token(data, 0, token, file);
    if (token != "P6") {
        throw ParseError(file, 0, "not a P6 pixmap");
    }
    pos = next_token(data, pos, token, file);
    const int width = parse_dim(token, file, "width");
    pos = next_token(data, pos, token, file);
    const int height = parse_dim(token, file, "height");
    pos = next_token(data, pos, token, file);
    if (token != "255") {
        throw ParseError(file, 0, "unsupported pixmap maxval '" + token + "'");
    }
    if (pos >= data.size()) {
        throw ParseError(file, 0, "truncated pixmap data");
    }
    ++pos;  // single whitespace byte separates header from raster data
    const std::size_t need = static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3;
    if (data.size() - pos < need) {
        throw ParseError(file, 0, "truncated pixmap data");
    }
    RasterImage img;
    img.width = width;
    img.height = height;
    img.pixels.assign(data.begin() + static_cast<std::ptrdiff_t>(pos),
                      data.begin() + static_cast<std::ptrdiff_t>(pos + need));
    return img;
}

std::string encode_ppm(const RasterImage& image) {
    if (!image.valid()) {
        throw std::invalid_argument("invalid raster image");
    }
    std::string out = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) +
                      "\n255\n";
    out.append(reinterpret_cast<const char*>(image.pixels.data()), image.pixels.size());
    return out;
}

RasterImage read_ppm(const fs::path& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream.is_open()) {
        throw IoError("cannot open " + path.string());
    }
    std::string data((std::istreambuf_iterator<char>(stream)), std::istreambuf_iterator<char>());
    return decode_ppm(data, path.string());
}

void write_ppm(const RasterImage& image, const fs::path& path) {
    const auto data = encode_ppm(image);
    std::ofstream stream(path, std::ios::binary);
    if (!stream.is_open()) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    stream.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!stream.good()) {
        throw IoError("cannot write " + path.string());
    }
}

RedetectSequence generate_redetection_sequence(const RasterImage& image, const Box& target,
                                               std::size_t n_frames) {
    if (!image.valid()) {
        throw std::invalid_argument("invalid seed image");
    }
    if (n_frames <= redetect_displacement_frame) {
        throw std::invalid_argument("n_frames must exceed " +
                                    std::to_string(redetect_displacement_frame));
    }
    if (!target.valid() || !integer_aligned(target.x) || !integer_aligned(target.y) ||
        !integer_aligned(target.w) || !integer_aligned(target.h)) {
        throw std::invalid_argument("target box must be integer-aligned");
    }
    const int tx = static_cast<int>(target.x);
    const int ty = static_cast<int>(target.y);
    const int tw = static_cast<int>(target.w);
    const int th = static_cast<int>(target.h);
    if (tx < 0 || ty < 0 || tx + tw > image.width || ty + th > image.height) {
        throw std::invalid_argument("target box lies outside the seed image");
    }

    RedetectSequence seq;
    const int cw = 3 * image.width;
    const int ch = 3 * image.height;

    seq.static_frame.width = cw;
    seq.static_frame.height = ch;
    seq.static_frame.pixels.assign(static_cast<std::size_t>(cw) * ch * 3, 0);
    blit(seq.static_frame, image, 0, 0, 0, 0, image.width, image.height);

    seq.displaced_frame = seq.static_frame;
    zero_rect(seq.displaced_frame, tx, ty, tw, th);
    blit(seq.displaced_frame, image, cw - tw, ch - th, tx, ty, tw, th);

    const Box displaced{static_cast<double>(cw - tw), static_cast<double>(ch - th),
                        static_cast<double>(tw), static_cast<double>(th)};
    seq.truth.resize(n_frames);
    for (std::size_t t = 0; t < n_frames; ++t) {
        seq.truth[t].region = t < redetect_displacement_frame ? target : displaced;
    }
    return seq;
}

RedetectOutcome judge_redetection(const TrackerRun& run, const std::vector<FrameTruth>& truth,
                                  double iou_threshold) {
    if (run.frames.size() != truth.size()) {
        throw AlignmentError("run '" + run.sequence_name + "' has " +
                             std::to_string(run.frames.size()) + " frames, ground truth has " +
                             std::to_string(truth.size()));
    }
    if (!(iou_threshold > 0.0 && iou_threshold <= 1.0)) {
        throw std::invalid_argument("iou_threshold must lie in (0,1]");
    }
    RedetectOutcome outcome;
    for (std::size_t t = redetect_displacement_frame; t < truth.size(); ++t) {
        if (overlap(run.frames[t].region, truth[t].region) >= iou_threshold) {
            outcome.success = true;
            outcome.frames_to_redetect = t - redetect_displacement_frame;
            break;
        }
    }
    return outcome;
}

CampaignSummary redetect_campaign(const std::vector<SequenceTruth>& sequences,
                                  const std::vector<TrackerRun>& runs, double iou_threshold) {
    if (sequences.size() != runs.size()) {
        throw AlignmentError("campaign has " + std::to_string(sequences.size()) +
                             " sequences but " + std::to_string(runs.size()) + " runs");
    }
    CampaignSummary summary;
    summary.seeds = sequences.size();
    std::size_t frames_total = 0;
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        auto outcome = judge_redetection(runs[i], sequences[i].frames, iou_threshold);
        if (outcome.success) {
            ++summary.successes;
            frames_total += *outcome.frames_to_redetect;
        }
        summary.outcomes.push_back(outcome);
    }
    if (summary.successes > 0) {
        summary.mean_frames =
            static_cast<double>(frames_total) / static_cast<double>(summary.successes);
    }
    return summary;
}

} // namespace lteval
