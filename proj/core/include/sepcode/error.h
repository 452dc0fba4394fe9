#ifndef SEPCODE_ERROR_H_
#define SEPCODE_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace sepcode {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input (code files, descriptors, PLS text).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured subset budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("enumeration needs " + std::to_string(required) +
              " subsets, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace sepcode

#endif  // SEPCODE_ERROR_H_
