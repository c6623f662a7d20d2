#pragma once

#include <stdexcept>
#include <string>

namespace edgeideal {

/// An enumeration or memory bound was hit. Callers treat this as
/// "inconclusive", never as a mathematical answer.
class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally invalid input (loops, bad roots, violated construction conditions).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input document (bad JSON, missing or mistyped fields).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline void require_bound(bool ok, const std::string& what) {
  if (!ok) throw BoundExceeded(what);
}

}  // namespace edgeideal
