#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dcover {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph, subgraph or partition violates its structural invariants.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Permutation voltage assignment is not a valid one (bad permutation or
/// phi(e^-1) != phi(e)^-1).
class VoltageError : public Error {
 public:
  using Error::Error;
};

/// Two spanning subgraphs (or a subgraph file and its graph) do not share the
/// same parent graph.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A function was called outside the domain where its statement applies.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A coloring is not proper on the graph it was checked against.
class ImproperColoringError : public Error {
 public:
  using Error::Error;
};

/// An exact or exhaustive computation refused an input above its size limit.
class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& what, std::optional<int> greedy_bound = std::nullopt)
      : Error(what), greedy_bound_(greedy_bound) {}

  /// Upper bound from a greedy coloring, when the refusing solver computed one.
  std::optional<int> greedy_bound() const { return greedy_bound_; }

 private:
  std::optional<int> greedy_bound_;
};

}  // namespace dcover
