#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact polynomial division was requested but no exact quotient exists.
class NotDivisibleError : public Error {
public:
    explicit NotDivisibleError(const std::string& what) : Error(what) {}
};

/// A polynomial square root was requested but the argument is not a perfect square.
class NotASquareError : public Error {
public:
    explicit NotASquareError(const std::string& what) : Error(what) {}
};

/// Evaluation was given an assignment that misses a used variable.
class MissingVariableError : public Error {
public:
    explicit MissingVariableError(const std::string& what) : Error(what) {}
};

/// A Laurent variable was assigned zero in an evaluation.
class ZeroAtLaurentVariableError : public Error {
public:
    explicit ZeroAtLaurentVariableError(const std::string& what) : Error(what) {}
};

/// A variable name was not found in the relevant variable table.
class UnknownVariableError : public Error {
public:
    explicit UnknownVariableError(const std::string& what) : Error(what) {}
};

/// Matrix power with the trace recursion requires determinant one.
class NotUnimodularError : public Error {
public:
    explicit NotUnimodularError(const std::string& what) : Error(what) {}
};

/// Parameters violate a documented domain restriction.
class DomainViolationError : public Error {
public:
    explicit DomainViolationError(const std::string& what) : Error(what) {}
};

/// A reciprocal of zero appeared while evaluating a continued fraction.
class CFDivisionByZeroError : public Error {
public:
    explicit CFDivisionByZeroError(const std::string& what) : Error(what) {}
};

/// The fraction list does not describe a knot (it describes a link or is invalid).
class NotAKnotError : public Error {
public:
    explicit NotAKnotError(const std::string& what) : Error(what) {}
};

class InvalidFractionError : public Error {
public:
    explicit InvalidFractionError(const std::string& what) : Error(what) {}
};

/// A sign vector outside the admissible set was supplied.
class InvalidSignVectorError : public Error {
public:
    explicit InvalidSignVectorError(const std::string& what) : Error(what) {}
};

/// Diagram propagation produced a boundary quadruple that is not the identity.
class ConventionMismatchError : public Error {
public:
    explicit ConventionMismatchError(const std::string& what) : Error(what) {}
};

/// A candidate variety point could not be lifted back to matrices.
class ReconstructionFailureError : public Error {
public:
    explicit ReconstructionFailureError(const std::string& what) : Error(what) {}
};

/// Newton refinement failed to reach the requested residual.
class NoConvergenceError : public Error {
public:
    explicit NoConvergenceError(const std::string& what) : Error(what) {}
};

class SingularJacobianError : public Error {
public:
    explicit SingularJacobianError(const std::string& what) : Error(what) {}
};

/// Input text could not be parsed; carries the offending position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace charvar
