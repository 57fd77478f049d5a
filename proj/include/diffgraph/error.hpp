#pragma once

#include <stdexcept>
#include <string>

namespace diffgraph {

/// Malformed text input (descriptor, table file, graph file, certificate).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Cayley table that violates a group axiom.
class InvalidTable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation requires the group to be the direct product of
/// its Sylow subgroups.
class NotNilpotent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured search cap was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An embedding scheme does not belong to the graph it is applied to.
class SchemeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diffgraph
