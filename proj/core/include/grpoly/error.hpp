#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grpoly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a documented size cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input; carries the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// An iterative numeric method failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace grpoly
