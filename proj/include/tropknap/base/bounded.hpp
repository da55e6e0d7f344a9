#pragma once

#include <cstdint>
#include <span>

#include "tropknap/base/witness.hpp"
#include "tropknap/core/seed.hpp"

namespace tk::base {

// Profit sequence on indices [0, t] with values known up to v: entries whose
// true value exceeds v read v + 1, every entry <= v is exact with high
// probability and always realized by a subset. Items are grouped by the
// binary magnitude of weight and profit; each group is split into z random
// subgroups, each subgroup solved by colour coding over u^2 buckets, and all
// pieces are combined by bounded monotone max-plus products.
SeqResult bc_profit_bounded(std::span<const Item> items, std::int64_t t, std::int64_t v, const SeedCtx& seed,
                            WitnessTree& tree);

// Weight sequence on profit indices [0, v] with weights known up to t:
// entries above t read t + 1, or +inf when no subset of items no heavier
// than t reaches the profit.
SeqResult bc_weight_bounded(std::span<const Item> items, std::int64_t v, std::int64_t t, const SeedCtx& seed,
                            WitnessTree& tree);

// Constants of the colour-coding stage for a group that admits at most z items.
int bc_bucket_root(std::int64_t z);   // u: a subgroup keeps up to u items, split over u^2 buckets
int bc_repetitions(std::int64_t z);   // independent colourings combined entrywise

}  // namespace tk::base
