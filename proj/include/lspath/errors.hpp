#pragma once

#include <stdexcept>
#include <string>

namespace lspath {

/// Malformed or out-of-range user input (unknown type label, non-dominant
/// weight where a dominant one is required, bad syntax).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical invariant failed at runtime. Seeing one of these means a
/// bug, or a counterexample to something that is supposed to be a theorem.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace lspath
