#include "tropknap/core/instance.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "tropknap/core/ext_int.hpp"

namespace tk {

KnapsackInstance::KnapsackInstance(std::vector<std::pair<std::int64_t, std::int64_t>> wp,
                                   std::int64_t capacity) {
  items_.reserve(wp.size());
  for (std::size_t i = 0; i < wp.size(); ++i) items_.push_back({wp[i].first, wp[i].second, i, false});
  capacity_ = capacity;
  recompute();
}

KnapsackInstance KnapsackInstance::from_items(std::vector<Item> items, std::int64_t capacity) {
  KnapsackInstance r;
  r.items_ = std::move(items);
  r.capacity_ = capacity;
  r.recompute();
  return r;
}

void KnapsackInstance::recompute() {
  if (capacity_ < 0) throw std::invalid_argument("instance: negative capacity");
  w_max_ = p_max_ = w_sum_ = p_sum_ = 0;
  for (const Item& it : items_) {
    if (!it.internal && (it.weight <= 0 || it.profit <= 0))
      throw std::invalid_argument("instance: weights and profits must be positive");
    if (it.weight < 0 || it.profit < 0) throw std::invalid_argument("instance: negative item");
    w_max_ = std::max(w_max_, it.weight);
    p_max_ = std::max(p_max_, it.profit);
    w_sum_ = checked_add(w_sum_, it.weight);
    p_sum_ = checked_add(p_sum_, it.profit);
  }
}

std::string KnapsackInstance::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::int64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(capacity_);
  mix(static_cast<std::int64_t>(items_.size()));
  for (const Item& it : items_) {
    mix(it.weight);
    mix(it.profit);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Solution::Solution(const KnapsackInstance& inst, std::vector<std::size_t> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  std::map<std::size_t, const Item*> by_id;
  for (const Item& it : inst.items()) by_id[it.id] = &it;
  std::vector<std::size_t> kept;
  for (std::size_t id : ids_) {
    auto f = by_id.find(id);
    if (f == by_id.end()) throw std::invalid_argument("Solution: unknown item id");
    if (f->second->internal) continue;
    kept.push_back(id);
    weight_ += f->second->weight;
    profit_ += f->second->profit;
  }
  ids_ = std::move(kept);
}

bool Solution::consistent_with(const KnapsackInstance& inst) const {
  std::map<std::size_t, const Item*> by_id;
  for (const Item& it : inst.items()) by_id[it.id] = &it;
  std::int64_t w = 0, p = 0;
  for (std::size_t id : ids_) {
    auto f = by_id.find(id);
    if (f == by_id.end()) return false;
    w += f->second->weight;
    p += f->second->profit;
  }
  return w == weight_ && p == profit_;
}

NormalizeResult normalize(const KnapsackInstance& inst) {
  std::vector<Item> kept;
  for (const Item& it : inst.items())
    if (it.weight <= inst.capacity()) kept.push_back(it);
  NormalizeResult r;
  r.residual = KnapsackInstance::from_items(std::move(kept), inst.capacity());
  const KnapsackInstance& res = r.residual;
  bool all_fit = res.total_weight() <= res.capacity();
  bool wide = static_cast<__int128>(res.capacity()) >=
              static_cast<__int128>(res.n()) * static_cast<__int128>(res.w_max());
  if (all_fit || wide) {
    r.trivial_opt = res.total_profit();
    for (const Item& it : res.items()) r.trivial_ids.push_back(it.id);
    r.residual = KnapsackInstance::from_items({}, inst.capacity());
  }
  return r;
}

bool ratio_greater(const Item& a, const Item& b) {
  return static_cast<__int128>(a.profit) * b.weight > static_cast<__int128>(b.profit) * a.weight;
}

std::vector<Item> sorted_by_ratio(std::span<const Item> items) {
  std::vector<Item> v(items.begin(), items.end());
  std::sort(v.begin(), v.end(), [](const Item& a, const Item& b) {
    if (ratio_greater(a, b)) return true;
    if (ratio_greater(b, a)) return false;
    return a.id < b.id;
  });
  return v;
}

}  // namespace tk
