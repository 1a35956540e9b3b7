#pragma once

#include <stdexcept>
#include <string>

namespace goldenbeta {

/// Input outside the mathematical domain of an operation (x outside [0,1), division by zero, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed or inconsistent input: inadmissible words, non-density inputs, violated constraints.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap was hit (enumeration depth, bit-size guard, degree bound).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The floating-point fast path can no longer produce trustworthy digits.
class PrecisionError : public ResourceError {
public:
    using ResourceError::ResourceError;
};

} // namespace goldenbeta
