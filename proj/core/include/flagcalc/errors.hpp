#pragma once

#include <stdexcept>
#include <string>

namespace flagcalc {

/// Arithmetic outside the domain of an operation, e.g. division by zero.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input violates a documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A conic L_{q,m} with q.m = 0 was passed where a smooth conic is required.
class DegenerateConicError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A linear system that was required to be nonempty has no members.
class EmptySystemError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A self-check inside the library failed. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace flagcalc
