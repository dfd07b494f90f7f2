#pragma once

#include <stdexcept>
#include <string>

namespace translie {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Basis index arithmetic left the range of std::int64_t.
class IndexOverflow : public Error {
 public:
  using Error::Error;
};

class UnknownNotFound : public Error {
 public:
  using Error::Error;
};

/// An operator or solver was asked about symbols it does not define.
class DomainError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class EmptySystem : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace translie
