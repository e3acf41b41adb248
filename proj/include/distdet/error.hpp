#pragma once

#include <stdexcept>
#include <string>

namespace distdet {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (edge-list files, report JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the supported range (cycle length < 3, dimension 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Structural precondition violated: disconnected graph, self-loop,
/// duplicate edge, graph not bicyclic, cycles not disjoint.
class GraphError : public Error {
 public:
  using Error::Error;
};

}  // namespace distdet
