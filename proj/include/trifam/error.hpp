#pragma once

#include <stdexcept>
#include <string>

namespace trifam {

// Bad arguments, malformed files, preconditions the caller can fix.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : input_error {
  parse_error(std::size_t line, const std::string& what)
      : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A checked claim does not hold for the given input (e.g. a family that is
// not intersecting).
struct claim_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal assertion that the extremal argument guarantees has failed.
// Seeing one means a predicate or a generator is broken.
struct proof_violation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace trifam
