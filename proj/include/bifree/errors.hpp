#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bifree {

// All library failures derive from Error so callers (the CLI in particular)
// can map them to a single exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ground-set sizes disagree, or exceed the enumeration cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

// An ordering precondition failed (e.g. lower does not refine upper).
class OrderError : public Error {
 public:
  using Error::Error;
};

class ChiMismatchError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// A moment was requested that the available pure data cannot determine.
// Carries the offending word's symbol ids so callers can print names.
class InsufficientDataError : public Error {
 public:
  explicit InsufficientDataError(const std::string& what, std::vector<int> symbols = {})
      : Error(what), symbols_(std::move(symbols)) {}
  const std::vector<int>& symbols() const { return symbols_; }

 private:
  std::vector<int> symbols_;
};

class DegenerateCentringError : public Error {
 public:
  using Error::Error;
};

// Operation not available in the distribution's construction mode.
class ModeError : public Error {
 public:
  using Error::Error;
};

// Input outside an operation's domain (e.g. right letters for free_delta).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input: partitions, chi strings, rationals, spec files.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bifree
