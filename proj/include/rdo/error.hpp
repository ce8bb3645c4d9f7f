#pragma once

#include <stdexcept>
#include <string>

namespace rdo {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Least-squares system has fewer rows than unknowns.
class UnderdeterminedSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Least-squares design matrix is numerically rank deficient.
class ConditioningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rdo
