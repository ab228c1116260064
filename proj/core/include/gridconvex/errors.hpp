#pragma once

#include <stdexcept>

namespace gridconvex {

// Raised when a randomized construction cannot certify its required
// geometric property within the retry budget.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an exponential operation is asked to run beyond desk scale
// without an explicit override.
struct ScaleGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gridconvex
