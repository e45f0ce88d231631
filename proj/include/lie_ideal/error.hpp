#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lie_ideal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Characteristic is neither 0 nor a supported prime.
class InvalidCharacteristic : public Error {
public:
    using Error::Error;
};

/// Two values from different fields (or different ambient dimensions) met.
class CharacteristicMismatch : public Error {
public:
    using Error::Error;
};

/// Shapes do not agree: ragged rows, wrong vector length, non-square matrix.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Division by zero in the field.
class ZeroDivision : public Error {
public:
    using Error::Error;
};

/// A matrix is not a linear combination of the algebra's basis.
class NotInSpan : public Error {
public:
    using Error::Error;
};

/// Basis matrices are linearly dependent; `index` is the 1-based position of
/// the first redundant matrix.
class IndependenceError : public Error {
public:
    IndependenceError(std::size_t index, const std::string& what)
        : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// The bracket of basis elements `first` and `second` (1-based) leaves the span.
class ClosureError : public Error {
public:
    ClosureError(std::size_t first, std::size_t second, const std::string& what)
        : Error(what), first_(first), second_(second) {}
    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

/// Structure constants fail antisymmetry or the Jacobi identity.
class StructureError : public Error {
public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A well-formed generator that does not belong to the algebra.
class GeneratorError : public Error {
public:
    using Error::Error;
};

}  // namespace lie_ideal
