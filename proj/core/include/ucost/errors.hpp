#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ucost {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a documented constraint (model parameters, solver
/// configuration, sampling specs, ...). The message names the first
/// violated constraint.
class validation_error : public error {
public:
    using error::error;
};

/// Malformed input text. Carries the 1-based line number of the offending
/// line when known (0 otherwise).
class parse_error : public error {
public:
    explicit parse_error(const std::string& what, std::size_t line = 0)
        : error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A computation left its numeric domain: non-finite result, non-positive
/// denominator, or an argument outside the required interval.
class numeric_error : public error {
public:
    using error::error;
};

/// The fixed-point iteration hit its iteration cap. Carries the last
/// iterate so callers can report how far the solve got.
class convergence_error : public error {
public:
    convergence_error(const std::string& what, double last_k_tilde,
                      double residual, int iterations)
        : error(what + ": k_tilde = " + std::to_string(last_k_tilde) +
                ", relative residual = " + std::to_string(residual) +
                " after " + std::to_string(iterations) + " iterations"),
          last_k_tilde_(last_k_tilde),
          residual_(residual),
          iterations_(iterations) {}

    double last_k_tilde() const noexcept { return last_k_tilde_; }
    double residual() const noexcept { return residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    double last_k_tilde_;
    double residual_;
    int iterations_;
};

/// Root bracketing failed: the bracket is degenerate, shows no sign change,
/// or shows more than one.
class bracket_error : public error {
public:
    using error::error;
};

}  // namespace ucost
