#ifndef SYMSIG_ERRORS_HPP
#define SYMSIG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symsig {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: files, expressions, flag combinations.
class InputError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : InputError(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownVariable : public InputError {
public:
    explicit UnknownVariable(const std::string& name)
        : InputError("unknown variable '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class BadCoefficient : public InputError {
public:
    using InputError::InputError;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

class NonInvertibleDenominator : public Error {
public:
    using Error::Error;
};

class DegreeNotInvertible : public Error {
public:
    using Error::Error;
};

/// Pair/step budget of a Groebner computation exhausted.
class ResourceLimitExceeded : public Error {
public:
    using Error::Error;
};

class ClosureCapExceeded : public Error {
public:
    using Error::Error;
};

class SingularGenerator : public Error {
public:
    using Error::Error;
};

/// Group contains a pseudo-reflection; carries the offending element index.
class NotSmall : public Error {
public:
    NotSmall(const std::string& what, std::size_t witness_index)
        : Error(what), witness_index_(witness_index) {}
    std::size_t witness_index() const { return witness_index_; }

private:
    std::size_t witness_index_;
};

class CharacteristicDividesOrder : public Error {
public:
    using Error::Error;
};

class NonIntegerCoefficient : public Error {
public:
    using Error::Error;
};

/// A cross-check that can only fail on an implementation bug.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace symsig

#endif
