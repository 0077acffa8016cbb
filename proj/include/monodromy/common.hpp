// Shared error types and small helpers used across the library.
#ifndef MONODROMY_COMMON_HPP_
#define MONODROMY_COMMON_HPP_

#include <stdexcept>
#include <string>

namespace monodromy {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed user input (bad word syntax, out-of-range weight, ...).
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A configured search/iteration cap was reached before a decision.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// An internal cross-check failed; indicates a bug, not bad input.
struct ConsistencyError : Error {
  explicit ConsistencyError(const std::string& msg) : Error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }
[[noreturn]] inline void fail_parse(const std::string& msg) { throw ParseError(msg); }
[[noreturn]] inline void fail_cap(const std::string& msg) { throw CapExceeded(msg); }
[[noreturn]] inline void fail_consistency(const std::string& msg) { throw ConsistencyError(msg); }

}  // namespace monodromy

#endif  // MONODROMY_COMMON_HPP_
