#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace geomplex {

// Absolute tolerance for floating-point comparisons. All quantities handled
// by this library are O(1) min/max/L-inf compositions of input values.
inline constexpr double kAbsTol = 1e-9;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an exact enumeration would exceed its configured cap.
struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Number of worker threads for internally parallel operations: the minimum
// of the hardware concurrency and the GEOMPLEX_THREADS environment variable
// (when set). Always at least 1.
int max_threads();

}  // namespace geomplex
