#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lteval {

/// Malformed file content. Carries the source file and 1-based line number
/// when known; line 0 means "whole file".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, std::size_t line, const std::string& message)
        : std::runtime_error(compose(file, line, message)), file_(std::move(file)), line_(line) {}

    [[nodiscard]] const std::string& file() const { return file_; }
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    static std::string compose(const std::string& file, std::size_t line, const std::string& message) {
        std::string out;
        if (!file.empty()) {
            out += file;
            out += ": ";
        }
        if (line > 0) {
            out += "line " + std::to_string(line) + ": ";
        }
        out += message;
        return out;
    }

    std::string file_;
    std::size_t line_ = 0;
};

/// Structural mismatch between inputs that must line up frame-for-frame
/// (missing result files, length mismatches, unmatched sequence names).
class AlignmentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure: unreadable or unwritable paths.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lteval
