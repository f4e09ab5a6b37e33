#pragma once

#include <stdexcept>
#include <string>

namespace gridsalvage {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter or input value violates a documented precondition.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// Certificate text could not be parsed; the message names the field or
// byte position that failed.
class ParseError : public Error {
public:
    using Error::Error;
};

// The construction's precondition failed (too much damage inside the
// chosen region); the caller must subdivide or fall back.
class NoGuaranteeError : public Error {
public:
    using Error::Error;
};

// The guarantee for the requested structure is below one vertex, so no
// certificate is produced.
class EmptyResultError : public Error {
public:
    using Error::Error;
};

// A certificate is structurally broken (for example a disconnected
// branch set) in a context that cannot return a validation report.
class CertificateError : public Error {
public:
    using Error::Error;
};

// An exact oracle was asked for an instance above its size cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

// The antichain-based subcube bound does not apply to this instance;
// the search is not attempted.
class BoundNotApplicableError : public Error {
public:
    using Error::Error;
};

}  // namespace gridsalvage
