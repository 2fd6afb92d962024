#pragma once

#include <stdexcept>
#include <string>

namespace dialeval {

// Bad or malformed input: files, flags, dimension mismatches. CLI exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure: divergence, degenerate geometry (zero vectors, zero
// variance). CLI exit code 2.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dialeval
