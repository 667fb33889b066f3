#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wmark {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition (bad dimensions, out-of-range
/// label, malformed fractions, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Matrix / model dimension mismatch.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Unparseable text input (CSV cell, architecture string, config line).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Operation called out of order (e.g. selecting a key before predictions
/// were recorded).
class StateError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// File exists but its contents are not a valid artifact.
class CorruptFileError : public Error {
public:
    using Error::Error;
};

/// Artifact format version is not supported.
class VersionError : public Error {
public:
    using Error::Error;
};

/// Numerical breakdown (non-finite parameters after an update).
class NumericError : public Error {
public:
    using Error::Error;
};

/// Candidate pool does not contain enough eligible samples for the
/// requested key length. Carries the counts so callers can report precisely.
class InsufficientCandidatesError : public Error {
public:
    InsufficientCandidatesError(std::size_t found_, std::size_t needed_)
        : Error("eligible candidates " + std::to_string(found_) + " < key length " +
                std::to_string(needed_) +
                "; raise the pool multiplier C or the number of embedding epochs"),
          found(found_),
          needed(needed_) {}

    std::size_t found;
    std::size_t needed;
};

} // namespace wmark
