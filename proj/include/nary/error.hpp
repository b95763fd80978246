#pragma once

#include <stdexcept>
#include <string>

namespace nary {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Mismatched tensor shapes, slot indices out of range, wrong arities.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// A dense object would exceed the configured entry cap.
class SizeGuardError : public Error {
public:
  using Error::Error;
};

/// A computation exceeds its explicit work budget (e.g. ℓ! permutations).
class BudgetError : public Error {
public:
  using Error::Error;
};

/// Singular metric or matrix where an inverse is required.
class SingularError : public Error {
public:
  using Error::Error;
};

/// Malformed input file or literal.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Unknown fixture name, bad option value, etc.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

}  // namespace nary
