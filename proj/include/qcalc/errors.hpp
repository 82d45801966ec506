#pragma once

#include <stdexcept>
#include <string>

namespace qcalc {

/// Argument outside the mathematical domain of an operation (q outside (0,1),
/// t <= 0 for gamma_q, x = 0 for the q-derivative, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Arithmetic mode cannot honor the request (ExactRational with a value that
/// has no rational representation).
struct ModeError : std::invalid_argument {
    explicit ModeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A factor of an infinite product in a denominator vanished (within the
/// pole-guard threshold in Float mode, exactly in ExactRational mode).
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// Bilateral or one-sided series terms failed to decay within the window.
/// Integral primitives report this as a flag; wrappers that return a plain
/// value throw it instead.
struct DivergenceWarning : std::runtime_error {
    explicit DivergenceWarning(const std::string& what) : std::runtime_error(what) {}
};

/// A truncated series with zero leading coefficient cannot be inverted.
struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

/// The window needed for an exact series identity could not be bounded from
/// the parameters (term orders do not grow past the coefficient cap).
struct WindowError : std::runtime_error {
    explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qcalc
