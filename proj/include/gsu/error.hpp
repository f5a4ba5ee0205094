#pragma once

#include <stdexcept>
#include <string>

namespace gsu {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments, malformed input, broken invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

class DisconnectedGraphError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Solver failure, degenerate frame, singular system.
class NumericalError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gsu
