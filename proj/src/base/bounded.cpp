#include "tropknap/base/bounded.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <stdexcept>

#include "tropknap/base/merge.hpp"

namespace tk::base {

int bc_bucket_root(std::int64_t z) { return std::bit_width(static_cast<std::uint64_t>(z)) + 1; }
int bc_repetitions(std::int64_t z) { return std::bit_width(static_cast<std::uint64_t>(z)) + 3; }

namespace {

// Both senses in one routine. "key" is the index dimension (weight for
// profit sequences, profit for weight sequences), "val" the value dimension.
struct Bounded {
  WitnessTree& tree;
  Sense sense;
  std::int64_t key_cap, val_cap;

  bool prof() const { return sense == Sense::profit; }
  std::int64_t key(const Item& it) const { return prof() ? it.weight : it.profit; }
  std::int64_t val(const Item& it) const { return prof() ? it.profit : it.weight; }
  Sentinel sent() const { return prof() ? Sentinel::neg_inf : Sentinel::pos_inf; }

  NodeId empty_node() {
    std::vector<ExtInt> v(prof() ? static_cast<std::size_t>(key_cap + 1) : 1, ExtInt(0));
    return tree.add(WitnessTree::Empty{}, MonotoneSeq(0, std::move(v), Direction::non_decreasing, sent()));
  }

  // Best single item per index, over [0, min(largest key, lim)].
  NodeId single_node(std::vector<Item> items, std::int64_t lim) {
    if (items.empty()) return empty_node();
    std::int64_t top = 0;
    for (const Item& it : items) top = std::max(top, key(it));
    top = std::min(top, lim);
    std::vector<ExtInt> s(static_cast<std::size_t>(top + 1));
    if (prof()) {
      // s[j] = max profit of an item with weight <= j; ties keep the lighter item first.
      std::vector<std::int64_t> best(s.size(), 0);
      for (const Item& it : items)
        if (it.weight <= top) best[static_cast<std::size_t>(it.weight)] = std::max(best[static_cast<std::size_t>(it.weight)], it.profit);
      std::int64_t run = 0;
      for (std::size_t j = 0; j < s.size(); ++j) s[j] = run = std::max(run, best[j]);
      std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return a.weight != b.weight ? a.weight < b.weight : a.id < b.id;
      });
    } else {
      // s[j] = min weight of an item with profit >= j; s[0] = 0.
      std::vector<std::int64_t> best(s.size(), ExtInt::kPosInf);
      for (const Item& it : items) {
        auto j = static_cast<std::size_t>(std::min(it.profit, top));
        best[j] = std::min(best[j], it.weight);
      }
      std::int64_t run = ExtInt::kPosInf;
      for (std::size_t j = s.size(); j-- > 1;) s[j] = run = std::min(run, best[j]);
      s[0] = 0;
      std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return a.weight != b.weight ? a.weight < b.weight : a.id < b.id;
      });
    }
    return tree.add(WitnessTree::Single{std::move(items)},
                    MonotoneSeq(0, std::move(s), Direction::non_decreasing, sent()));
  }

  // Subgroup sequence with at most u items, by repeated colour coding.
  NodeId subgroup(const std::vector<Item>& items, int u, int reps, std::int64_t lim, const SeedCtx& seed) {
    if (items.empty()) return empty_node();
    const std::size_t buckets = static_cast<std::size_t>(u) * static_cast<std::size_t>(u);
    std::vector<NodeId> runs;
    for (int r = 0; r < reps; ++r) {
      // A subgroup no larger than the bucket count gets one bucket per item,
      // which scatters every subset; one run then suffices.
      const bool direct = items.size() <= buckets;
      std::vector<std::vector<Item>> bucket(direct ? items.size() : buckets);
      Rng rng(seed.child(static_cast<std::uint64_t>(r), 0));
      for (std::size_t i = 0; i < items.size(); ++i)
        bucket[direct ? i : rng.below(buckets)].push_back(items[i]);
      std::vector<NodeId> leaves;
      for (auto& b : bucket)
        if (!b.empty()) leaves.push_back(single_node(std::move(b), lim));
      runs.push_back(product_all(tree, leaves, seed.child(static_cast<std::uint64_t>(r), 1), {0, lim}, val_cap));
      if (direct) break;
    }
    return best_of(tree, std::move(runs));
  }

  NodeId run(std::span<const Item> all, const SeedCtx& seed) {
    std::int64_t key_max = 0;
    std::map<std::pair<int, int>, std::vector<Item>> groups;
    std::optional<Item> over;  // lightest fitting item worth more than the cap on its own
    for (const Item& it : all) {
      if (it.weight <= 0 || it.profit <= 0) throw std::invalid_argument("bounded sequence: items need positive weight and profit");
      if (prof() && key(it) > key_cap) continue;      // does not fit any index
      if (val(it) > val_cap) {
        if (prof() && (!over || it.weight < over->weight)) over = it;
        continue;
      }
      key_max = std::max(key_max, key(it));
      int a = std::bit_width(static_cast<std::uint64_t>(key(it)));
      int b = std::bit_width(static_cast<std::uint64_t>(val(it)));
      groups[{a, b}].push_back(it);
    }
    if (groups.empty()) return saturate(finish(empty_node()), over);
    // A weight sequence may overshoot its profit index by one item.
    const std::int64_t key_room = key_cap + (prof() ? 0 : key_max);
    std::vector<NodeId> parts;
    for (auto& [ab, items] : groups) {
      const auto [a, b] = ab;
      const std::int64_t ka = std::int64_t{1} << (a - 1), vb = std::int64_t{1} << (b - 1);
      std::int64_t z = std::min((key_room + ka - 1) / ka, (val_cap + vb - 1) / vb);
      z = std::clamp<std::int64_t>(z, 1, static_cast<std::int64_t>(items.size()));
      const int u = bc_bucket_root(z), reps = bc_repetitions(z);
      const SeedCtx gseed = seed.child(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
      std::vector<std::vector<Item>> sub(static_cast<std::size_t>(z));
      Rng rng(gseed.child(0));
      for (const Item& it : items) sub[rng.below(static_cast<std::uint64_t>(z))].push_back(it);
      const std::int64_t lim = std::min(key_cap, (std::int64_t{1} << a) * u);
      std::vector<NodeId> subs;
      for (std::size_t i = 0; i < sub.size(); ++i)
        if (!sub[i].empty()) subs.push_back(subgroup(sub[i], u, reps, lim, gseed.child(1, i)));
      parts.push_back(product_all(tree, subs, gseed.child(2), {0, key_cap}, val_cap));
    }
    return saturate(finish(product_all(tree, parts, seed.child(~std::uint64_t{0}), {0, key_cap}, val_cap)), over);
  }

  // From the weight of `over` on, the true value exceeds the cap.
  NodeId saturate(NodeId node, const std::optional<Item>& over) {
    if (!over) return node;
    std::vector<ExtInt> s(static_cast<std::size_t>(key_cap + 1), ExtInt::neg_inf());
    for (std::int64_t j = over->weight; j <= key_cap; ++j) s[static_cast<std::size_t>(j)] = ExtInt(over->profit);
    NodeId fixed = tree.add(WitnessTree::Fixed{{*over}},
                            MonotoneSeq(0, std::move(s), Direction::non_decreasing, Sentinel::neg_inf));
    NodeId best = best_of(tree, {node, fixed});
    tree.set_seq(best, saturate_above(tree.seq(best), val_cap));
    return best;
  }

  // Profit sequences are extended to the full index range by a running max.
  NodeId finish(NodeId node) {
    if (!prof() || tree.seq(node).last() >= key_cap) return node;
    return running_node(tree, node, {0, key_cap});
  }
};

}  // namespace

SeqResult bc_profit_bounded(std::span<const Item> items, std::int64_t t, std::int64_t v, const SeedCtx& seed,
                            WitnessTree& tree) {
  if (t < 0 || v < 0) throw std::invalid_argument("bc_profit_bounded: negative bound");
  if (tree.sense() != Sense::profit) throw std::invalid_argument("bc_profit_bounded: tree sense");
  Bounded b{tree, Sense::profit, t, v};
  NodeId id = b.run(items, seed);
  return {tree.seq(id), id};
}

SeqResult bc_weight_bounded(std::span<const Item> items, std::int64_t v, std::int64_t t, const SeedCtx& seed,
                            WitnessTree& tree) {
  if (t < 0 || v < 0) throw std::invalid_argument("bc_weight_bounded: negative bound");
  if (tree.sense() != Sense::weight) throw std::invalid_argument("bc_weight_bounded: tree sense");
  Bounded b{tree, Sense::weight, v, t};
  NodeId id = b.run(items, seed);
  return {tree.seq(id), id};
}

}  // namespace tk::base
