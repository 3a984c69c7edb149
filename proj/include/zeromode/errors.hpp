#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace zeromode {

// Invalid arguments are reported with std::invalid_argument throughout.

/// A series, quadrature or iteration did not reach its tolerance.
/// Carries whatever partial value was available when it gave up.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(std::string const& what,
                              double partial = std::numeric_limits<double>::quiet_NaN())
        : std::runtime_error(what), partial_(partial) {}

    double partial_value() const noexcept { return partial_; }

private:
    double partial_;
};

/// Evaluation requested at a point where the quantity is not defined
/// (e.g. log-derivatives at a zero of a density).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A mathematical identity or positivity statement failed numerically.
/// The message names the witnessing point.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace zeromode
