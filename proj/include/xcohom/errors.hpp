#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xcohom {

// Validation failure carrying a machine-readable witness: the element indices
// at which the violated axiom can be re-evaluated.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string kind, std::vector<int> witness, const std::string& message)
      : std::runtime_error(kind + ": " + message),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

private:
  std::string kind_;
  std::vector<int> witness_;
};

class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(long long cap)
      : std::runtime_error("search budget exceeded (cap " + std::to_string(cap) +
                           " candidate evaluations)"),
        cap_(cap) {}

  long long cap() const noexcept { return cap_; }

private:
  long long cap_;
};

// Internal cross-check failed: a fact the library derives and re-verifies did
// not hold. Distinct from ValidationError (bad input); this is a bug trap.
class CheckFailed : public std::logic_error {
public:
  explicit CheckFailed(const std::string& message) : std::logic_error(message) {}
};

inline void check(bool ok, const std::string& message) {
  if (!ok) throw CheckFailed(message);
}

}  // namespace xcohom
