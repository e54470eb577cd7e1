#pragma once

#include <stdexcept>
#include <string>

namespace aulist {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error in a problem file or a unifier literal; positions are 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

// A violated precondition on otherwise well-formed input: shared variables,
// a non-simple expression, a claimed unifier that does not unify, ...
struct InputError : Error {
  using Error::Error;
};

// A selection path that cannot be replayed, a final problem that is not
// solved, or a completeness check that found an uncovered unifier.
struct VerifyError : Error {
  using Error::Error;
};

}  // namespace aulist
