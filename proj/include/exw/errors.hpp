#pragma once

#include <stdexcept>

namespace exw {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed argument or unparseable text.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Index outside the valid range of a word or alphabet.
class OutOfRange : public Error {
public:
    using Error::Error;
};

// A documented precondition was broken by the caller.
class ContractViolation : public Error {
public:
    using Error::Error;
};

// A configured cap or enumeration budget was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

} // namespace exw
