#pragma once

#include <stdexcept>
#include <string>

namespace moa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Extents that do not agree (count mismatch, contraction mismatch, overflow).
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// An index component outside its axis, or an index of the wrong length.
class BoundsError : public Error {
  public:
    using Error::Error;
};

/// An operand whose rank is not accepted by the operation.
class RankError : public Error {
  public:
    using Error::Error;
};

/// An invalid scalar argument (worker count, operation name, ...).
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// A kernel plan that does not describe the operands it is executed on.
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

/// Malformed text input (array literals, CSV files).
class ParseError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace moa
