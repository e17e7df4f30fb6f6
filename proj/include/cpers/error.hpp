#ifndef CPERS_ERROR_HPP
#define CPERS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cpers {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands live in rings with different numbers of variables.
class ArityMismatch : public Error {
public:
    ArityMismatch(std::size_t lhs, std::size_t rhs)
        : Error("arity mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured budget. Raised instead of
/// truncating results.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A certificate (witness, coloring, decomposition) failed re-validation.
class CertificateError : public Error {
public:
    using Error::Error;
};

} // namespace cpers

#endif
