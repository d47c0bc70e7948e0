#pragma once

#include <stdexcept>
#include <string>

namespace hooklaw {

// Invalid argument for a mathematical operation (bad cell, negative t, n = 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A computation would exceed a configured budget (enumeration cap, rejection trials).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A truncated series could not certify its tail bound.
class ToleranceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inconsistent sampler or CLI configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal invariant failed; always a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hooklaw
