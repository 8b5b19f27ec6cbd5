#pragma once

#include <stdexcept>
#include <string>

namespace lintype {

// Error taxonomy; the CLI maps these onto process exit codes:
//   InputError -> 1, PreconditionError -> 2, ResourceError -> 3.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: syntax errors, unknown variables, bad usage.
class InputError : public Error {
public:
  using Error::Error;
};

// Operands owned by different rings.
class RingMismatchError : public Error {
public:
  using Error::Error;
};

// A mathematical precondition does not hold (non-isolated singular locus,
// inhomogeneous input where homogeneity is required, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A configured resource cap was hit; never silent truncation.
class ResourceError : public Error {
public:
  using Error::Error;
};

// An internal invariant failed (e.g. two provably equivalent criteria
// disagree).  Always a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

class ParseError : public InputError {
public:
  ParseError(const std::string& msg, int line, int column)
      : InputError(msg + " (line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace lintype
