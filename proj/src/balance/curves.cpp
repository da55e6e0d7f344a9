#include "tropknap/balance/curves.hpp"

#include "tropknap/base/bounded.hpp"
#include "tropknap/base/merge.hpp"

namespace tk::balance {

std::vector<Item> Curve::reconstruct(std::int64_t index) const {
  std::vector<Item> items = tree->reconstruct(node, index);
  if (swapped)
    for (Item& it : items) std::swap(it.weight, it.profit);
  return items;
}

Curve bad_curve(std::span<const Item> bad, std::int64_t extent_w, std::int64_t extent_p, const SeedCtx& seed, int reps) {
  Curve c;
  c.tree = std::make_shared<base::WitnessTree>(base::Sense::profit);
  std::vector<base::NodeId> runs;
  for (int r = 0; r < std::max(reps, 1); ++r)
    runs.push_back(base::bc_profit_bounded(bad, extent_w, extent_p, seed.child(static_cast<std::uint64_t>(r)), *c.tree).node);
  base::NodeId best = base::best_of(*c.tree, std::move(runs));
  c.node = base::restricted_node(*c.tree, best, {0, extent_w}, {0, extent_p});
  c.seq = c.tree->seq(c.node);
  return c;
}

Curve good_complement_curve(std::span<const Item> good, std::int64_t extent_w, std::int64_t extent_p,
                            const SeedCtx& seed, int reps) {
  std::vector<Item> swapped(good.begin(), good.end());
  for (Item& it : swapped) std::swap(it.weight, it.profit);
  Curve c;
  c.swapped = true;
  c.tree = std::make_shared<base::WitnessTree>(base::Sense::weight);
  std::vector<base::NodeId> runs;
  for (int r = 0; r < std::max(reps, 1); ++r)
    runs.push_back(base::bc_weight_bounded(swapped, extent_w, extent_p, seed.child(static_cast<std::uint64_t>(r)), *c.tree).node);
  base::NodeId best = base::best_of(*c.tree, std::move(runs));
  c.node = base::restricted_node(*c.tree, best, {0, extent_w}, {0, extent_p});
  c.seq = c.tree->seq(c.node);
  return c;
}

}  // namespace tk::balance
