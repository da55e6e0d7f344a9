#pragma once

#include <cstdint>
#include <span>

#include "tropknap/base/witness.hpp"

namespace tk::base {

// P[j] for j in [0, k]: max profit of a subset with weight <= j. O(n k).
// With a tree (profit sense) a take-bit table is recorded for reconstruction.
SeqResult bellman_profit_dp(std::span<const Item> items, std::int64_t k, WitnessTree* tree = nullptr);

// W[j] for j in [0, k]: min weight of a subset with profit >= j, +inf if none.
// Profits above j are clamped, so W[j] reads W[max(j - p, 0)] + w.
SeqResult bellman_weight_dp(std::span<const Item> items, std::int64_t k, WitnessTree* tree = nullptr);

}  // namespace tk::base
