#pragma once

#include <stdexcept>
#include <string>

namespace icnd {

// Error taxonomy shared by every module. Each condition named in a
// contract maps onto exactly one of these types so callers (and tests)
// can distinguish them.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error("dimension error: " + msg) {}
};

struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& msg) : Error("invalid input: " + msg) {}
};

struct DegenerateInputError : Error {
    explicit DegenerateInputError(const std::string& msg) : Error("degenerate input: " + msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct UnsupportedFormatError : Error {
    explicit UnsupportedFormatError(const std::string& msg) : Error("unsupported format: " + msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error("i/o error: " + msg) {}
};

struct TrainingDivergenceError : Error {
    explicit TrainingDivergenceError(const std::string& msg) : Error("training diverged: " + msg) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error("usage error: " + msg) {}
};

struct StageDependencyError : Error {
    explicit StageDependencyError(const std::string& msg) : Error("stage dependency: " + msg) {}
};

struct UndefinedMetricError : Error {
    explicit UndefinedMetricError(const std::string& msg) : Error("undefined metric: " + msg) {}
};

}  // namespace icnd
