#pragma once

#include <cstdint>
#include <span>

#include "tropknap/base/witness.hpp"
#include "tropknap/core/seed.hpp"

namespace tk::base {

// Banded dynamic program over a random item order. Row k keeps only indices
// within delta of k/n * center; entries on `window` are returned, clamped at 0.
// Correct with probability >= 1 - 1/n; every finite entry is realized.
struct BandReport {
  std::int64_t delta = 0;
  bool full_band = false;  // delta >= center: every row spans the whole range
};

// Profit entries P[window] with slope `center`.
SeqResult band_profit_dp(std::span<const Item> items, std::int64_t center, IntInterval window, const SeedCtx& seed,
                         WitnessTree& tree, BandReport* report = nullptr);
// Weight entries W[window] over profit indices with slope `center`.
SeqResult band_weight_dp(std::span<const Item> items, std::int64_t center, IntInterval window, const SeedCtx& seed,
                         WitnessTree& tree, BandReport* report = nullptr);

// P[t - l .. t + l] and W[v - l .. v + l]; l must lie in [0, t] (resp. [0, v]).
SeqResult hexu_profit_window(std::span<const Item> items, std::int64_t t, std::int64_t l, const SeedCtx& seed,
                             WitnessTree& tree, BandReport* report = nullptr);
SeqResult hexu_weight_window(std::span<const Item> items, std::int64_t v, std::int64_t l, const SeedCtx& seed,
                             WitnessTree& tree, BandReport* report = nullptr);

// delta = l + ceil(4 sqrt(center * big * ln max(n l, 2))).
std::int64_t band_delta(std::size_t n, std::int64_t center, std::int64_t big, std::int64_t l);

}  // namespace tk::base
