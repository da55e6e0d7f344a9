#include "tropknap/balance/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace tk::balance {

RatioPartition max_prefix_partition(const KnapsackInstance& inst) {
  RatioPartition r;
  std::vector<Item> order = sorted_by_ratio(inst.items());
  std::int64_t w = 0;
  for (const Item& it : order) {
    if (w + it.weight > inst.capacity()) break;
    w += it.weight;
    r.prefix.push_back(it);
  }
  if (r.prefix.empty()) {
    if (!order.empty()) throw std::logic_error("max_prefix_partition: first item exceeds capacity; normalize first");
    return r;
  }
  r.has_rho = true;
  r.rho_profit = r.prefix.back().profit;
  r.rho_weight = r.prefix.back().weight;
  for (const Item& it : inst.items()) {
    // p / w against rho = P / W, compared by cross multiplication.
    __int128 lhs = static_cast<__int128>(it.profit) * r.rho_weight;
    __int128 rhs = static_cast<__int128>(r.rho_profit) * it.weight;
    if (lhs > 2 * rhs) r.good.push_back(it);
    else if (2 * lhs < rhs) r.bad.push_back(it);
    else r.medium.push_back(it);
  }
  return r;
}

Deviation deviation_from_prefix(const RatioPartition& part, const std::vector<std::size_t>& solution_ids) {
  auto in_z = [&](std::size_t id) { return std::find(solution_ids.begin(), solution_ids.end(), id) != solution_ids.end(); };
  Deviation d;
  for (const Item& it : part.good)
    if (!in_z(it.id)) d.weight += it.weight, d.profit += it.profit;
  for (const Item& it : part.bad)
    if (in_z(it.id)) d.weight += it.weight, d.profit += it.profit;
  return d;
}

}  // namespace tk::balance
