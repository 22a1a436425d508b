#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seppack {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic mixed exact and floating scalars, or required the other kind.
class KindError : public Error {
public:
  using Error::Error;
};

/// Argument outside the domain an operation is defined on.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Invalid parameter value (alpha >= 1, wrong radius, ...).
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Malformed text or JSON input. Carries the 1-based line when known.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Two translates of a planar packing overlap (or coincide).
class PackingViolation : public Error {
public:
  PackingViolation(std::size_t i, std::size_t j, const std::string &detail)
      : Error("translates " + std::to_string(i) + " and " + std::to_string(j) + " " + detail),
        i_(i), j_(j) {}
  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }

private:
  std::size_t i_;
  std::size_t j_;
};

/// A generator failed to reach a value that is a proven maximum.
class ConstructionGap : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed.
class InternalError : public Error {
public:
  using Error::Error;
};

/// Request exceeds what can be materialized in memory.
class CapacityError : public Error {
public:
  using Error::Error;
};

} // namespace seppack
