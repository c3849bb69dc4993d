#pragma once

#include <stdexcept>
#include <string>

namespace clustermirror {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad JSON, bad index, wrong shape).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A geometric construction has no solution (e.g. no common basepoint).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// An internal postcondition failed; indicates corrupt data or a bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace clustermirror
