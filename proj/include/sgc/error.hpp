#pragma once

#include <stdexcept>

namespace sgc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument was out of range or inconsistent.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A graph violates a structural precondition (disconnected, zero degree, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sgc
