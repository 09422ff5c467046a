#pragma once

#include <stdexcept>
#include <string>

namespace fibercone {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Division or inversion of a zero field element.
class DivisionByZeroError : public Error {
 public:
  explicit DivisionByZeroError(const std::string& msg = "division by zero")
      : Error(msg) {}
};

/// Input violates a mathematical hypothesis (non-homogeneous generator,
/// ideal not m-primary, I not contained in K, ...). CLI exit code 2.
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

/// A configured resource cap was exceeded (pair limit, chain limit,
/// table cap, retry budget). Never a wrong answer. CLI exit code 3.
class ResourceCapError : public Error {
 public:
  explicit ResourceCapError(const std::string& msg) : Error(msg) {}
};

/// A statement that is a proved theorem for the given inputs was observed
/// false. Indicates a bug in the engine, not bad data. CLI exit code 4.
class DefectError : public Error {
 public:
  explicit DefectError(const std::string& msg) : Error(msg) {}
};

/// Input DSL rejection with position information. CLI exit code 1.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& expected,
             const std::string& got)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": expected " + expected + ", got " +
              got),
        line(line),
        column(column),
        expected(expected),
        got(got) {}

  int line;
  int column;
  std::string expected;
  std::string got;
};

}  // namespace fibercone
