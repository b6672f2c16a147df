#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lwsurf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression text could not be parsed. `offset` is a byte offset into the source.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        detail_(message) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

/// Evaluation left the real domain of a function, or a precondition on an
/// argument range was broken.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotTimelike : public Error {
 public:
  using Error::Error;
};

/// The induced metric is not positive definite at the requested point.
class NotSpacelike : public Error {
 public:
  using Error::Error;
};

/// The raw profile ODE left its admissible slope band before the end of the range.
class BlowUp : public Error {
 public:
  BlowUp(const std::string& message, double last_valid_u)
      : Error(message), last_valid_u_(last_valid_u) {}
  double last_valid_u() const noexcept { return last_valid_u_; }

 private:
  double last_valid_u_;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class MissingParam : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NonPositiveRadius : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed or schema-violating JSON surface configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace lwsurf
