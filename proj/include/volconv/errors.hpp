#pragma once

#include <stdexcept>

namespace volconv {

/// Vector or matrix sizes that do not fit the operation.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inputs that are individually valid but incompatible with each other
/// (mismatched interval lengths, mixed basis families).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedBasis : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegenerateParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Root of all floating-point failures: non-convergence, singular systems.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularSystem : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Unreadable, unwritable or malformed files.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OversizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace volconv
