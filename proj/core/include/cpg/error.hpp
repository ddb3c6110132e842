#pragma once

#include <stdexcept>
#include <string>

namespace cpg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: group specs, edge lists, catalog lines.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A constructor argument violates its precondition (e.g. an ill-defined
/// semidirect action).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The coprime graph of subgroups has no vertices: trivial or prime order.
class UndefinedGraphError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (group order, exact-solver vertex cap, MIS cap)
/// was exceeded. Never silently replaced by an approximation.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpg
