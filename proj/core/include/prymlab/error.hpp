#pragma once

#include <stdexcept>
#include <string>

namespace prymlab {

// Bad user input: malformed text, wrong degrees, product constraint, ...
// The CLI maps this to exit status 3.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An identity that must hold exactly did not. Exit status 2.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace prymlab
