#pragma once

#include <stdexcept>
#include <string>

namespace rugosity {

/// Malformed input data (bad magic, truncated payload, unparsable header).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A value is syntactically fine but outside its allowed domain.
class ValueError : public std::runtime_error {
public:
    explicit ValueError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two grids that must share dimensions do not.
class ShapeError : public std::runtime_error {
public:
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation that needs at least one surface voxel got none.
class EmptySurfaceError : public std::runtime_error {
public:
    explicit EmptySurfaceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A metric's denominator is degenerate for the given inputs.
class UndefinedMetricError : public std::runtime_error {
public:
    explicit UndefinedMetricError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem-level failure while reading or writing mask files.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rugosity
