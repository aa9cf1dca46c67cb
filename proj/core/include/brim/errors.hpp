#pragma once

#include <stdexcept>
#include <string>

namespace brim {

// Base for all engine errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic misuse: division by zero, mixed prime moduli.
class ArithmeticError : public Error {
public:
  using Error::Error;
};

// Objects from different rings / ambient modules mixed in one operation.
class RingMismatchError : public Error {
public:
  using Error::Error;
};

// Input violates a structural precondition (inhomogeneous generators,
// bad weights, zero ring, unsupported declared data).
class StructureError : public Error {
public:
  using Error::Error;
};

// M is not contained in N where containment is required.
class NotSubmoduleError : public Error {
public:
  using Error::Error;
};

// A configured budget (reduction count, sample window) was exhausted.
// Never signals a wrong answer, only an abandoned computation.
class ResourceError : public Error {
public:
  using Error::Error;
};

// Lexical/syntactic/semantic errors in session input carry a location.
class ParseError : public Error {
public:
  ParseError(int line, int col, const std::string& what)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + what),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

}  // namespace brim
