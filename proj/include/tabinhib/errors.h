#ifndef TABINHIB_ERRORS_H_
#define TABINHIB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tabinhib {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input document (carries line/field location in the message).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Structurally valid input that violates a domain invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Argument outside its documented range.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Filesystem or stream failure.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

/// Non-finite value where a finite one is required (e.g. diverged training).
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

}  // namespace tabinhib

#endif  // TABINHIB_ERRORS_H_
