#pragma once

#include <cstdint>
#include <vector>

#include "tropknap/core/monotone_seq.hpp"

namespace tk::solver {

// Windows of the combination tree. Level l covers 2^l groups; index windows
// are [lo / 2^l - r, hi / 2^l + r] with r = sqrt(spread / 2^l) * eta, value
// windows likewise, both clipped to [0, final hi].
struct TreeLevelPlan {
  int q = 0;
  std::int64_t eta = 0;
  std::int64_t index_spread = 0;  // t * w_max (profit solvers) or OPT~ * p_max (weight solvers)
  std::int64_t value_spread = 0;
  IntInterval index_final, value_final;
  std::vector<IntInterval> index_at, value_at;  // per level 0..q
  IntInterval index_base, value_base;           // [0, hi of level q]
};

// eta = 17 * ceil(log2 n).
std::int64_t plan_eta(std::size_t n);

// Largest q with 2^q <= bound (bound >= 1), and 2^q <= n.
int largest_pow2_exponent(long double bound, std::size_t n);

TreeLevelPlan make_plan(int q, std::size_t n, IntInterval index_final, IntInterval value_final,
                        std::int64_t index_spread, std::int64_t value_spread);

}  // namespace tk::solver
