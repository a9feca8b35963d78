#pragma once

#include <stdexcept>
#include <string>

namespace fiedler {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list / graph6 / level-sequence input.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  /// 1-based line number, or 0 when the input is not line oriented.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class DisconnectedGraphError : public Error {
 public:
  DisconnectedGraphError() : Error("graph is not connected") {}
  using Error::Error;
};

/// The operation is not defined for this input (e.g. longest path of a
/// graph with cycles and no certified path).
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : Error(what + " (last residual " + std::to_string(last_residual) + ")"),
        last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

}  // namespace fiedler
