#pragma once

#include <stdexcept>
#include <string>

namespace parastab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in incompatible ambient spaces or have mismatched shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A value violates a domain invariant (weights outside [0,1), non-prime field, ...).
/// `pointer` locates the offending field when the value came from a document.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what, std::string pointer = {})
        : Error(what), pointer_(std::move(pointer)) {}
    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

/// An exhaustive enumeration would visit more objects than the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain (JH on unstable input, HN without a
/// complete enumeration, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace parastab
