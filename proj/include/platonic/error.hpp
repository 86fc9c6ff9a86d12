#pragma once

#include <stdexcept>
#include <string>

namespace platonic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in Q(sqrt5)") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Unsupported family/rank combination or unparseable diagram name.
class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

/// Decoration that breaks the grammar, has the wrong length, or cannot be
/// advanced by the decoration rules.
class InvalidDecoration : public Error {
 public:
  using Error::Error;
};

/// Diagram is not a connected, unbranched line, so the seed construction
/// does not yield a single orbit of faces per dimension.
class NotPlatonic : public Error {
 public:
  using Error::Error;
};

/// A group-theoretic identity failed (non-integral orbit/stabilizer ratio).
/// Always indicates an arithmetic bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace platonic
