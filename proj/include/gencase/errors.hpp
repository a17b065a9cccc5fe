#pragma once

#include <stdexcept>
#include <string>

namespace gencase {

/// Raised when an exact-mode request exceeds a configured enumeration cap
/// (sphere radius or tape length). The CLI maps this to exit code 3.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid or unresolvable experiment configuration. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Report files could not be read or written. CLI exit code 4.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside a function's declared domain (wrong length, odd n, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A candidate evaluator or total program exceeded its own declared step
/// bound. Indicates a miscoded zoo entry, not a measurement outcome.
class StepBoundViolation : public std::logic_error {
public:
    explicit StepBoundViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace gencase
