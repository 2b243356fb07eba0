#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fano_toric {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input. Carries every problem found, not just
// the first one.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> messages);
  explicit ValidationError(const std::string& message)
      : ValidationError(std::vector<std::string>{message}) {}

  const std::vector<std::string>& messages() const noexcept { return messages_; }

 private:
  std::vector<std::string> messages_;
};

// A configurable search budget (faces, Cayley search nodes, fixed points) ran out.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// The operation needs a nonsingular Y_A (Cartier local data, section spaces).
class NotSmoothError : public Error {
 public:
  using Error::Error;
};

// Precondition of an operation violated by the caller (wrong degree, k > length, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An invariant the mathematics guarantees did not hold. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline ValidationError::ValidationError(std::vector<std::string> messages)
    : Error([&] {
        std::string joined;
        for (const auto& m : messages) {
          if (!joined.empty()) joined += "; ";
          joined += m;
        }
        return joined;
      }()),
      messages_(std::move(messages)) {}

}  // namespace fano_toric
