#pragma once

#include <cstdint>

#include "tropknap/core/instance.hpp"
#include "tropknap/core/monotone_seq.hpp"
#include "tropknap/core/seed.hpp"
#include "tropknap/hardness/mpv.hpp"

namespace tk::harness {

KnapsackInstance gen_random_instance(std::size_t n, std::int64_t w_max, std::int64_t p_max, std::int64_t t,
                                     const SeedCtx& seed);

// Profits follow w_i times a ratio drawn from [r/4, r] with r = p_max / w_max,
// t = ceil(sum w / 2). Redrawn until (t / w_max) / (OPT~ / p_max) lies in [1/8, 8].
KnapsackInstance gen_balanced_instance(std::size_t n, std::int64_t w_max, std::int64_t p_max, const SeedCtx& seed);

// (t / w_max) / (OPT~ / p_max) with OPT~ the greedy bound; 1 for trivial inputs.
double balancedness(const KnapsackInstance& inst);

// Length n, finite entries in [0, M] monotone along dir. Each entry is
// replaced by the sentinel infinity with probability inf_percent / 100.
MonotoneSeq random_monotone(std::size_t n, std::int64_t M, Direction dir, Sentinel sentinel, const SeedCtx& seed,
                            int inf_percent = 0);
// Arbitrary entries in [0, M].
MonotoneSeq random_arbitrary(std::size_t n, std::int64_t M, const SeedCtx& seed);

// Roughly half the instances satisfy the verification, the rest miss it by one entry.
hardness::MPVInstance random_mpv(std::int64_t n, const SeedCtx& seed);

}  // namespace tk::harness
