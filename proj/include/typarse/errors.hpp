#pragma once

#include <stdexcept>
#include <string>

namespace typarse {

// Malformed input text (bad column count, unparseable integer, ...).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A label or value that is not part of the declared inventory.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sentence whose head structure is not a tree rooted at 0.
class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incompatible tensor shapes fed to an operation.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite value produced by a numeric operation.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument or configuration detected before any work is done.
class ArgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation called in the wrong order (e.g. backward before forward).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// No arborescence exists for the given arc weights.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Prediction/gold structures that do not line up token for token.
class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace typarse
