#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsbt {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A real-valued parameter (Gaussian weight, width, ...) is outside its domain.
class parameter_error : public error {
public:
    using error::error;
};

/// The imaginary part of a quaternion is too small to define a slice axis.
class near_real_axis : public error {
public:
    using error::error;
};

/// Two imaginary units that must be orthogonal in R^4 are not.
class not_perpendicular : public error {
public:
    using error::error;
};

/// Two operands carry different Gaussian weights.
class mismatched_weight : public error {
public:
    using error::error;
};

/// A quadrature rule is too coarse for the requested integrand.
class quadrature_under_resolved : public error {
public:
    using error::error;
};

/// Malformed coefficient file. Carries the 1-based line number.
class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Invalid command-line or run configuration.
class config_error : public error {
public:
    using error::error;
};

namespace detail {

inline void require_positive_weight(double nu, const char* where) {
    if (!(nu > 0.0)) {
        throw parameter_error(std::string(where) + ": nu must be > 0, got " + std::to_string(nu));
    }
}

}  // namespace detail

}  // namespace qsbt
