#pragma once

#include <stdexcept>
#include <string>

namespace envelope {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid construction arguments, malformed input files, or a scenario whose
// pieces cannot work together (maps to CLI exit code 2).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A strategy needs the observed amount but the envelope stayed closed.
class MissingObservation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A strategy needs prior knowledge the player does not have.
class MissingPrior : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// The observed amount cannot arise under the given prior (CLI exit code 3).
class ImpossibleObservation : public Error {
public:
    using Error::Error;
};

} // namespace envelope
