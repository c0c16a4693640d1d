#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chainrec {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments to an operation (empty sets, dimension mismatches, ...).
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// Malformed input file; carries the byte offset where parsing stopped.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t at)
        : Error(msg + " (offset " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};

// Structurally valid JPEG that uses a coding mode we do not handle.
struct UnsupportedCoding : Error {
    explicit UnsupportedCoding(const std::string& msg) : Error(msg) {}
};

// Entropy-coded data could not be decoded.
struct DecodeError : Error {
    explicit DecodeError(const std::string& msg) : Error(msg) {}
};

// Bad experiment configuration or model file.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Dataset/training contract violations (empty context subsets, ...).
struct TrainingError : Error {
    explicit TrainingError(const std::string& msg) : Error(msg) {}
};

}  // namespace chainrec
