#include "tropknap/harness/brute.hpp"

#include <algorithm>
#include <stdexcept>

namespace tk::harness {

namespace {

struct Subset {
  std::int64_t w, p;
  std::uint32_t mask;
};

std::vector<Subset> enumerate(const std::vector<Item>& items, std::size_t from, std::size_t to, std::int64_t cap) {
  std::vector<Subset> out{{0, 0, 0}};
  for (std::size_t i = from; i < to; ++i) {
    std::size_t m = out.size();
    for (std::size_t s = 0; s < m; ++s) {
      std::int64_t w = out[s].w + items[i].weight;
      if (w <= cap) out.push_back({w, out[s].p + items[i].profit, out[s].mask | (1u << (i - from))});
    }
  }
  return out;
}

std::vector<std::size_t> ids_of(const std::vector<Item>& items, std::size_t from, std::uint32_t mask) {
  std::vector<std::size_t> ids;
  for (std::size_t b = 0; mask >> b; ++b)
    if (mask >> b & 1) ids.push_back(items[from + b].id);
  return ids;
}

}  // namespace

BruteResult brute_force_opt(const KnapsackInstance& inst) {
  const auto& items = inst.items();
  const std::size_t n = items.size();
  if (n > kBruteMaxN) throw std::length_error("brute force limited to 25 items");
  const std::int64_t cap = inst.capacity();
  const std::size_t half = n > 20 ? n / 2 : n;
  auto left = enumerate(items, 0, half, cap);
  auto right = enumerate(items, half, n, cap);
  // right side as a Pareto staircase sorted by weight
  std::sort(right.begin(), right.end(), [](const Subset& a, const Subset& b) {
    return a.w != b.w ? a.w < b.w : a.p > b.p;
  });
  std::vector<Subset> stair;
  for (const Subset& s : right)
    if (stair.empty() || s.p > stair.back().p) stair.push_back(s);
  BruteResult best;
  std::uint32_t lm = 0, rm = 0;
  bool have = false;
  for (const Subset& l : left) {
    auto it = std::upper_bound(stair.begin(), stair.end(), cap - l.w,
                               [](std::int64_t room, const Subset& s) { return room < s.w; });
    if (it == stair.begin()) continue;
    --it;
    if (!have || l.p + it->p > best.opt) {
      best.opt = l.p + it->p;
      lm = l.mask;
      rm = it->mask;
      have = true;
    }
  }
  auto ids = ids_of(items, 0, lm);
  auto more = ids_of(items, half, rm);
  ids.insert(ids.end(), more.begin(), more.end());
  best.solution = Solution(inst, std::move(ids));
  return best;
}

}  // namespace tk::harness
