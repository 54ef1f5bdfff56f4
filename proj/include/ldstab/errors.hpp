#pragma once

#include <stdexcept>
#include <string>

namespace ldstab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the domain an operation accepts (bad index,
/// mismatched dimensions, non-positive distribution, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A network document could not be read or does not match the schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A brute-force computation would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree produced different answers.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ldstab
