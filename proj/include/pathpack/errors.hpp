#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathpack {

// Bad input from the outside world (CLI arguments, files, parameter ranges).
// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text; the message carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A broken internal invariant. Never a user error; the CLI maps this to
// exit code 2. These checks stay on in release builds.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pathpack

#define PATHPACK_REQUIRE(cond, msg)                     \
  do {                                                  \
    if (!(cond)) throw ::pathpack::InvariantError(msg); \
  } while (0)
