#pragma once

#include <stdexcept>
#include <string>

namespace splitcomp {

/// Malformed textual input (graph6, JSON). The message names the offending byte
/// offset or field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed value that breaks one of its type invariants.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition (non-split graph handed to
/// a split-only routine, balanced object handed to a compilation down-map, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request beyond a supported size bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad names or combinations of arguments (unknown class tag, class mismatch).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace splitcomp
