#pragma once

#include <stdexcept>
#include <string>

namespace opinion {

/// Bad configuration or bad input data. The CLI maps this to exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem trouble (unreadable input, unwritable output). Exit code 2.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace opinion
