#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tropknap/core/budget.hpp"
#include "tropknap/core/seed.hpp"

namespace tk::conv {

// One false-positive segment [i1, i2] for a fixed output index k, with offset
// b = A^(l)[i] + B^(l)[k-i] - C^(l)[k] in [-10, 10].
struct SegmentView {
  std::int64_t i1, i2;
  int b;
};

// White-box hook: called for every (pair, level, k) after C^(l)[k] and the
// segment set T^(l) for k are final. Level h (the top) is reported with C = 0.
struct LevelEvent {
  int pair = 0;  // 3x + y
  std::int64_t p = 0;
  int level = 0;
  int top_level = 0;
  std::int64_t k = 0;
  std::int64_t c_level = 0;
  const std::vector<SegmentView>* segments = nullptr;
  const std::vector<std::int64_t>* a_shifted = nullptr;
  const std::vector<std::int64_t>* b_shifted = nullptr;
};

struct EngineTrace {
  std::function<void(const LevelEvent&)> on_level;
};

struct EngineStats {
  std::int64_t prime = 0;
  int top_level = 0;
  int pairs_run = 0;
  std::size_t max_infinity_runs = 0;
  std::uint64_t product_slots = 0;
  std::vector<std::uint64_t> segments_per_level;  // summed over pairs and k
};

// Exact min-plus product of a and b (kInf marks missing entries). Finite
// entries lie in [0, M] and are non-decreasing along the finite positions.
// Las Vegas: the random prime only affects running time.
std::vector<std::int64_t> minplus_engine(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b, std::int64_t M,
                                         const SeedCtx& seed, EngineStats* stats = nullptr,
                                         const EngineTrace* trace = nullptr,
                                         WorkBudget* budget = nullptr);

// Same with a caller-chosen prime p >= 2.
std::vector<std::int64_t> minplus_engine_with_prime(const std::vector<std::int64_t>& a,
                                                    const std::vector<std::int64_t>& b,
                                                    std::int64_t p, EngineStats* stats = nullptr,
                                                    const EngineTrace* trace = nullptr,
                                                    WorkBudget* budget = nullptr);

}  // namespace tk::conv
