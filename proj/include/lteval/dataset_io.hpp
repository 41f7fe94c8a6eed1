#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lteval/types.hpp"

namespace lteval {

// Line formats, one frame per line:
//   groundtruth:  x,y,w,h            or  nan,nan,nan,nan  (target absent)
//   results:      x,y,w,h,score      or  nan,nan,nan,nan,score
//   times:        milliseconds
//   attributes:   comma-separated letters from {O,V,P,C,F,S,A,W,I,D}
// '.' is the only radix character; LF or CRLF line endings; the trailing
// newline is optional. Every malformed line raises ParseError with its
// line number.

std::vector<FrameTruth> parse_groundtruth(std::string_view text, const std::string& file = {});
std::vector<FramePrediction> parse_results(std::string_view text, const std::string& file = {});
std::set<AttributeCode> parse_attributes(std::string_view text, const std::string& file = {});
std::vector<double> parse_times(std::string_view text, const std::string& file = {});

// Canonical serializations: shortest round-trip number form, LF endings.
std::string serialize_groundtruth(const std::vector<FrameTruth>& frames);
std::string serialize_results(const std::vector<FramePrediction>& frames);
std::string serialize_times(const std::vector<double>& times_ms);

/// Loads `<root>/<sequence>/groundtruth.txt` (+ optional attributes.txt)
/// for every subdirectory of root, in name order. The sequence resolution
/// is the tight integer bound of all annotated regions.
std::vector<SequenceTruth> load_dataset(const std::filesystem::path& root);

/// Loads `<tracker_dir>/<sequence>.txt` (+ optional `<sequence>_time.txt`)
/// for every dataset sequence, aligned with the dataset order.
std::vector<TrackerRun> load_results(const std::filesystem::path& tracker_dir,
                                     const std::vector<SequenceTruth>& dataset);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

} // namespace lteval
