#pragma once

#include <stdexcept>
#include <string>

namespace restocast {

/// Bad input: malformed files, violated preconditions, infeasible configs.
/// The CLI maps this to exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric or runtime failure inside an otherwise valid computation
/// (non-convergence, degenerate chains, exhausted rejection budgets).
/// The CLI maps this to exit code 2.
struct ComputationError : std::runtime_error {
    explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace restocast
