#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace purerank {

/// Malformed input text. `line` is 1-based when known, 0 otherwise.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

/// Structurally well-formed input that violates a domain precondition
/// (non-positive weight, damping outside (0,1), mismatched sizes, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative solver hit max_iterations before the step norm dropped
/// below tolerance. Carries the last iterate for diagnostics.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(std::string class_name, std::size_t iterations, double residual,
                     std::vector<double> last_iterate)
        : std::runtime_error("solver for class " + class_name + " did not converge after " +
                             std::to_string(iterations) + " iterations"),
          class_name_(std::move(class_name)),
          iterations_(iterations),
          residual_(residual),
          last_iterate_(std::move(last_iterate)) {}

    const std::string& class_name() const noexcept { return class_name_; }
    std::size_t iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }
    const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }

private:
    std::string class_name_;
    std::size_t iterations_ = 0;
    double residual_ = 0.0;
    std::vector<double> last_iterate_;
};

} // namespace purerank
