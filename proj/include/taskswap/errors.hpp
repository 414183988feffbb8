#pragma once

#include <stdexcept>
#include <string>

namespace taskswap {

// Error categories map 1:1 onto the CLI / C API status codes.
enum class ErrorCode : int {
  parse = 2,
  validation = 3,
  cap_exceeded = 4,
  internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::validation, what) {}
};

// A BFS target that is not in the group generated by the given set, e.g. an
// odd permutation under the hypercube generators.
class UnreachableError : public ValidationError {
 public:
  explicit UnreachableError(const std::string& what) : ValidationError(what) {}
};

class CapExceededError : public Error {
 public:
  explicit CapExceededError(const std::string& what)
      : Error(ErrorCode::cap_exceeded, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorCode::internal, what) {}
};

}  // namespace taskswap
