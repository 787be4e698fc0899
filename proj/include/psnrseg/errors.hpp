#pragma once

#include <stdexcept>

namespace psnrseg {

// Malformed PNM data; the message carries the byte offset of the failure.
struct PnmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Missing, unpaired or mutually inconsistent input data.
struct DatasetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-convergence or degenerate input to a numeric routine.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace psnrseg
