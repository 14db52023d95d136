#pragma once

#include <stdexcept>
#include <string>

namespace charpreg {

// Thrown on misuse of an operation (bad arguments, mismatched contexts).
// CLI exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by the ideal-file and expression parsers. CLI exit code 2.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at line " + std::to_string(line_) +
                           ", column " + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

// Thrown when a computation exceeds its degree guard. CLI exit code 3.
struct GuardAbort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a checked internal invariant fails. CLI exit code 4.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check_invariant(bool ok, const char* what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace charpreg
