#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace berge {

// Malformed hypergraph, graph or witness data supplied by the caller.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numeric parameter outside the documented domain (p < 2, t = 0, ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An operation that needs an r-uniform hypergraph got a mixed one.
struct UniformityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The request is well-formed but exceeds what the exhaustive routines handle.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace berge
