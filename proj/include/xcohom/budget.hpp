#pragma once

#include "xcohom/errors.hpp"

namespace xcohom {

// Shared candidate counter for the exhaustive searches. One instance per run;
// every enumeration charges it before evaluating a candidate.
class Budget {
public:
  static constexpr long long default_cap = 10'000'000;

  Budget() = default;
  explicit Budget(long long cap) : cap_(cap) {}

  void charge(long long n = 1) {
    used_ += n;
    if (used_ > cap_) throw BudgetExceeded(cap_);
  }

  long long used() const noexcept { return used_; }
  long long cap() const noexcept { return cap_; }

private:
  long long cap_ = default_cap;
  long long used_ = 0;
};

}  // namespace xcohom
