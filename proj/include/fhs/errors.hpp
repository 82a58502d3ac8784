#pragma once

#include <stdexcept>
#include <string>

namespace fhs {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_prime : error {
    using error::error;
};

struct too_large : error {
    using error::error;
};

struct division_by_zero : error {
    using error::error;
};

struct not_divisor : error {
    using error::error;
};

struct shape_mismatch : error {
    using error::error;
};

struct degenerate_set : error {
    using error::error;
};

struct invalid_param : error {
    using error::error;
};

struct not_bijective : error {
    using error::error;
};

struct overflow_error : error {
    using error::error;
};

struct io_error : error {
    using error::error;
};

// Sequence-file syntax problem; carries the 1-based position of the offender.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

} // namespace fhs
