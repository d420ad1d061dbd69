#pragma once

#include <stdexcept>
#include <string>

namespace smt {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition: invalid instance, matching
// that is not a matching (or not stable where stability is required),
// unknown person, node not present in a graph, and so on.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input text could not be parsed. Carries the 1-based line number when the
// input is line-oriented; 0 when a single token is at fault.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Enumeration was requested for an instance whose acceptable-pair count
// exceeds the configured cap.
class CapExceededError : public Error {
 public:
  CapExceededError(int size, int cap)
      : Error("instance has " + std::to_string(size) +
              " acceptable pairs; enumeration cap is " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  int size() const { return size_; }
  int cap() const { return cap_; }

 private:
  int size_;
  int cap_;
};

// A consistency check that should be unreachable fired: a structural
// guarantee the library relies on was observed to fail at runtime.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace smt
