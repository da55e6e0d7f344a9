#pragma once

#include <cstdint>

#include "tropknap/core/instance.hpp"

namespace tk::harness {

struct BruteResult {
  std::int64_t opt = 0;
  Solution solution;
};

constexpr std::size_t kBruteMaxN = 25;

// Subset enumeration; meet in the middle above 20 items. Throws
// std::length_error when n > kBruteMaxN.
BruteResult brute_force_opt(const KnapsackInstance& inst);

}  // namespace tk::harness
