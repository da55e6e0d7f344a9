#include "tropknap/base/greedy.hpp"

#include <vector>

namespace tk::base {

std::int64_t greedy_upper_bound(std::span<const Item> items, std::int64_t capacity) {
  std::vector<Item> fit;
  for (const Item& it : items)
    if (it.weight <= capacity) fit.push_back(it);
  std::vector<Item> order = sorted_by_ratio(fit);
  std::int64_t w = 0, p = 0;
  for (const Item& it : order) {
    if (w + it.weight > capacity) return p + it.profit;
    w += it.weight;
    p += it.profit;
  }
  return p;
}

std::int64_t greedy_upper_bound(const KnapsackInstance& inst) {
  return greedy_upper_bound(inst.items(), inst.capacity());
}

}  // namespace tk::base
