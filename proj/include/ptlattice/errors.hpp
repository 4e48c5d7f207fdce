#pragma once

#include <stdexcept>
#include <string>

namespace ptlattice {

// Numerical failures carry enough context to reproduce the offending call.
struct BracketFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonMonotone : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GrowthOverflow : std::runtime_error {
    GrowthOverflow(const std::string& msg, double max_im)
        : std::runtime_error(msg), max_im_eigenvalue(max_im) {}
    double max_im_eigenvalue;
};

struct StepNotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ptlattice
