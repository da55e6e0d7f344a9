#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "tropknap/balance/curves.hpp"
#include "tropknap/balance/partition.hpp"
#include "tropknap/core/instance.hpp"

namespace tk::balance {

// The medium items with the capacity and profit ranges an optimal solution's
// medium part must fall in, plus the good and bad curves.
struct BalancedSubproblem {
  RatioPartition part;
  KnapsackInstance medium;          // capacity w(P ∩ M)
  IntInterval capacity_window;      // w(P ∩ M) +- 11 w_max, within [0, t]
  IntInterval profit_window;        // p(P ∩ M) +- 11 p_max, within [0, inf)
  std::int64_t t = 0, w_max = 0, p_max = 0;
  std::int64_t good_weight = 0, good_profit = 0;
  std::int64_t good_extent = 0;  // min(10 w_max, w(G))
  Curve good;  // L over [0, good_extent], values <= min(10 p_max, p(G))
  Curve bad;   // P_B over [0, min(11 w_max, t)], values <= 11 p_max
};

// Requires a normalized instance (w_max <= t, not all items fitting).
BalancedSubproblem balance_reduce(const KnapsackInstance& inst, const SeedCtx& seed, int reps);

// Profit sequence of the medium instance over the capacity window, and how to
// recover a subset for one of its entries.
struct MediumCurve {
  MonotoneSeq seq;
  std::function<std::vector<Item>(std::int64_t)> reconstruct;
};

// Exact medium curve by Bellman's dynamic program.
MediumCurve medium_by_bellman(const BalancedSubproblem& sub);

struct CombineResult {
  std::int64_t opt = 0;
  std::vector<Item> items;  // empty unless reconstruction was requested
};

// max over c_G + c_M + c_B <= t of (p(G) - L[w(G) - c_G]) + P_M[c_M] + P_B[c_B],
// by two bounded monotone max-plus products. Throws if the sequences cannot
// realize any split at t.
CombineResult combine_balanced(const BalancedSubproblem& sub, const MediumCurve& medium, const SeedCtx& seed,
                               bool reconstruct);

}  // namespace tk::balance
