#pragma once

#include <stdexcept>
#include <string>

namespace bw {

// Input failed validation before any computation ran. The CLI maps this to exit code 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bounded search ran out of budget without reaching a verdict (CLI exit code 1).
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced something that fails its own verification.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bw
