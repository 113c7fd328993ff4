#pragma once

#include <functional>
#include <limits>

namespace cmph {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 200;
};

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    int subdivisions = 0;
};

// Adaptive Gauss-Kronrod (7-15) integration of f over [a, b]. Pass
// b = infinity for a semi-infinite range; the tail is then truncated in
// geometrically growing panels until two consecutive panels fall below the
// tolerance, which is a certified bound for integrands with monotone
// exponential-type decay. Throws QuadratureFailure when the tolerance
// cannot be met within the subdivision budget.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

inline constexpr double infinity = std::numeric_limits<double>::infinity();

} // namespace cmph
