#pragma once

#include <stdexcept>
#include <string>

namespace sheafres {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: inconsistent shapes, non-closed complexes,
/// cyclic cover relations, failed commutativity.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An argument outside an operation's domain (incomparable pair, a set that
/// is not up-closed, a non-monotone map).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unknown element, simplex, or vertex name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant breach. Reaching one of these is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sheafres
