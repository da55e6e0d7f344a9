#pragma once

#include <cstdint>
#include <vector>

#include "tropknap/core/instance.hpp"

namespace tk::balance {

// Split by profit-to-weight ratio against rho, the ratio of the last item of
// the maximum prefix solution: good > 2 rho, bad < rho / 2, medium between.
struct RatioPartition {
  std::vector<Item> prefix;  // maximum prefix solution, ratio order
  std::vector<Item> good, medium, bad;
  bool has_rho = false;      // false only for an empty prefix
  std::int64_t rho_profit = 0, rho_weight = 0;
};

RatioPartition max_prefix_partition(const KnapsackInstance& inst);

// For a solution Z (by ids): the good items outside Z and bad items inside Z,
// with their total weight and profit.
struct Deviation {
  std::int64_t weight = 0, profit = 0;
};
Deviation deviation_from_prefix(const RatioPartition& part, const std::vector<std::size_t>& solution_ids);

}  // namespace tk::balance
