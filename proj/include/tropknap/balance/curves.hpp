#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include "tropknap/base/witness.hpp"
#include "tropknap/core/seed.hpp"

namespace tk::balance {

struct Curve {
  MonotoneSeq seq;
  std::shared_ptr<base::WitnessTree> tree;
  base::NodeId node = -1;
  // Items of a subset realizing entry `index` (original weights and profits).
  std::vector<Item> reconstruct(std::int64_t index) const;
  bool swapped = false;
};

// P_B[0 .. extent_w] with values up to extent_p (larger entries are cut, so
// they read -inf). `reps` independent runs are combined by entrywise max.
Curve bad_curve(std::span<const Item> bad, std::int64_t extent_w, std::int64_t extent_p, const SeedCtx& seed, int reps);

// L[t''] for t'' in [0, extent_w]: least profit of a subset of `good` with
// weight >= t'', +inf when none or when it exceeds extent_p. Computed as the
// weight sequence of the instance with weights and profits swapped.
Curve good_complement_curve(std::span<const Item> good, std::int64_t extent_w, std::int64_t extent_p,
                            const SeedCtx& seed, int reps);

}  // namespace tk::balance
