#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bpir {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in finite field") {}
};

// An operand does not belong to the field it is used with.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Arithmetic produced a result that contradicts a field invariant (e.g. a
// trace that does not land in the base field). Signals a broken modulus.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ExhaustionError : public Error {
 public:
  using Error::Error;
};

class SingularBasis : public Error {
 public:
  using Error::Error;
};

class DuplicatePoint : public Error {
 public:
  using Error::Error;
};

class DegreeTooHigh : public Error {
 public:
  using Error::Error;
};

// No codeword lies within the unique-decoding radius.
class DecodeFailure : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// More byzantine answers than the scheme tolerates; raised by retrieval when
// the underlying decoder fails.
class ByzantineBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bpir
