#pragma once

#include <stdexcept>
#include <string>

namespace cmph {

// Input outside the mathematical domain of an operation (negative radicand,
// overshooting the inverse-square coupling bound, mixed unit systems, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solve exhausted its iteration/seed budget.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// The shooting oracle found no sign change in the scanned energy window.
struct BracketFailure : std::runtime_error {
    explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature could not meet the requested tolerance; carries the
// best estimate so callers can decide whether to accept it.
struct QuadratureFailure : std::runtime_error {
    QuadratureFailure(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate(estimate), error_bound(error_bound) {}
    double estimate;
    double error_bound;
};

} // namespace cmph
