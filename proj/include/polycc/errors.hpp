#pragma once

#include <stdexcept>
#include <string>

namespace polycc {

/// Parameter point or body set with (near-)coincident bodies, or a kernel
/// denominator at/below the coincidence scale.
class DegenerateConfigurationError : public std::runtime_error {
public:
    explicit DegenerateConfigurationError(const std::string& what)
        : std::runtime_error(what) {}
};

/// A solve relation has no root on the searched range.
class NoSolutionError : public std::runtime_error {
public:
    explicit NoSolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// A formal root exists but violates positivity (e.g. mass ratio <= 0).
class NoPhysicalSolutionError : public std::runtime_error {
public:
    explicit NoPhysicalSolutionError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Root-finding bracket does not straddle a sign change.
class BracketError : public std::invalid_argument {
public:
    explicit BracketError(const std::string& what) : std::invalid_argument(what) {}
};

/// Iteration budget exhausted before reaching the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polycc
