#pragma once

#include <stdexcept>
#include <string>

namespace quench {

// Bad run configuration: unknown keys, malformed values, invalid parameter
// combinations. The CLI maps this to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure at runtime (e.g. propagator non-convergence at the
// minimum internal step). Exit code 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A result landed on the edge of its search window: an MLE maximizer at the
// interval boundary or a scan extremum at the first/last grid point. The
// window is too narrow; the value is flagged rather than silently returned.
// Exit code 4.
struct boundary_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace quench
