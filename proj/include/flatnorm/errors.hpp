#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flatnorm {

/// Malformed input file. `offset` is the byte position where parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A solver hit a hard resource limit (iteration cap, enumeration cap).
/// `best_bound` carries the best objective seen before giving up, when one exists.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg, double best_bound = 0.0)
        : std::runtime_error(msg), best_bound_(best_bound) {}

    double best_bound() const { return best_bound_; }

private:
    double best_bound_;
};

/// File I/O failure, always carrying the path involved.
class IoError : public std::runtime_error {
public:
    IoError(const std::string& msg, const std::string& path)
        : std::runtime_error(msg + ": " + path), path_(path) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace flatnorm
