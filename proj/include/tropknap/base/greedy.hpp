#pragma once

#include <cstdint>
#include <span>

#include "tropknap/core/instance.hpp"

namespace tk::base {

// Profit of the maximal ratio-sorted prefix that fits `capacity`, plus the
// profit of the next item if there is one. Items heavier than the capacity
// are ignored. With w_max <= capacity: OPT <= result <= OPT + p_max.
std::int64_t greedy_upper_bound(std::span<const Item> items, std::int64_t capacity);
std::int64_t greedy_upper_bound(const KnapsackInstance& inst);

}  // namespace tk::base
