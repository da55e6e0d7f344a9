#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropknap/core/budget.hpp"
#include "tropknap/core/seed.hpp"

namespace tk::harness {

struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(int attempts)
      : std::runtime_error("all " + std::to_string(attempts) + " budgeted attempts ran out of work"),
        attempts(attempts) {}
  int attempts;
};

// ceil(log2 n), at least 1.
int budget_retries(std::size_t n);

// Median of the samples (upper median for even counts); 0 when empty.
std::uint64_t median_work(std::vector<std::uint64_t> samples);

template <class T>
struct BudgetRun {
  T value;
  int attempts = 0;          // 1 on first-try success
  std::uint64_t work = 0;    // units used by the successful attempt
};

// Runs op(seed_i, budget) with a WorkBudget of budget_factor * estimate units,
// where seed_i = seed.child(i). An attempt that throws BudgetExceeded is
// discarded and retried with the next child, up to budget_retries(n)
// attempts; then BudgetExhausted is thrown. An infinite factor gives an
// unlimited budget and a single attempt.
template <class Op>
auto monte_carlo_budget(Op&& op, double budget_factor, std::uint64_t estimate, std::size_t n, const SeedCtx& seed)
    -> BudgetRun<decltype(op(seed, std::declval<WorkBudget&>()))> {
  using T = decltype(op(seed, std::declval<WorkBudget&>()));
  if (!(budget_factor > 0)) throw std::invalid_argument("monte_carlo_budget: factor must be positive");
  const bool unlimited = std::isinf(budget_factor);
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  if (!unlimited) {
    double l = budget_factor * static_cast<double>(estimate);
    if (l < static_cast<double>(limit)) limit = static_cast<std::uint64_t>(l);
  }
  const int tries = unlimited ? 1 : budget_retries(n);
  for (int i = 0; i < tries; ++i) {
    WorkBudget budget(limit);
    try {
      T v = op(seed.child(static_cast<std::uint64_t>(i)), budget);
      return BudgetRun<T>{std::move(v), i + 1, budget.used()};
    } catch (const BudgetExceeded&) {
    }
  }
  throw BudgetExhausted(tries);
}

// Median work of `samples` unlimited runs on seed.child(1000 + i).
template <class Op>
std::uint64_t calibrate_work(Op&& op, const SeedCtx& seed, int samples = 3) {
  std::vector<std::uint64_t> used;
  for (int i = 0; i < samples; ++i) {
    WorkBudget budget;
    op(seed.child(1000 + static_cast<std::uint64_t>(i)), budget);
    used.push_back(budget.used());
  }
  return median_work(std::move(used));
}

}  // namespace tk::harness
