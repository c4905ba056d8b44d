#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidcong {

/// Thrown when an enumeration or search hits its configured cap. Carries the
/// amount of work done so the caller can report a partial count.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t partial)
      : std::runtime_error(what + " (budget exceeded after " + std::to_string(partial) + ")"), partial_(partial) {}

  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

/// A precondition on mathematical input failed (wrong lattice, not unimodular, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace braidcong
