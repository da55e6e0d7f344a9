#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace tk {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("work budget exceeded") {}
};

// Cooperative work counter. Long-running routines charge abstract work units
// and abort by exception once the limit is crossed.
class WorkBudget {
 public:
  explicit WorkBudget(std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) : limit_(limit) {}
  void charge(std::uint64_t units) {
    used_ += units;
    if (used_ > limit_) throw BudgetExceeded();
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace tk
