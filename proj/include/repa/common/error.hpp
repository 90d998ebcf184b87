#pragma once

#include <stdexcept>
#include <string>

namespace repa {

// Every failure raised by the library derives from Error so callers can map
// categories onto exit codes without string matching.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration: bad parameters, infeasible partition arithmetic.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Caller supplied malformed input (shape mismatch, empty set, missing labels).
class InputError : public Error {
public:
    using Error::Error;
};

/// A file did not match its binary or JSON schema.
class FormatError : public Error {
public:
    using Error::Error;
};

/// The operation needs something the client cannot provide (labels, training).
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// A sampling request could not be satisfied from the available pool.
class SamplingError : public Error {
public:
    using Error::Error;
};

/// A statistic is undefined for the given input (e.g. zero variance).
class UndefinedError : public Error {
public:
    using Error::Error;
};

/// An upstream artifact a stage depends on is missing.
class ArtifactError : public Error {
public:
    using Error::Error;
};

/// Broken internal contract; indicates a bug rather than bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace repa
