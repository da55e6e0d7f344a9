#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tk {

struct Item {
  std::int64_t weight = 0;
  std::int64_t profit = 0;
  // Position in the instance the item originally came from; solutions report these.
  std::size_t id = 0;
  // Internal items may have zero weight or profit and never appear in reported solutions.
  bool internal = false;
};

class KnapsackInstance {
 public:
  KnapsackInstance() = default;
  // Assigns ids 0..n-1. Rejects non-positive weights/profits and negative capacity.
  KnapsackInstance(std::vector<std::pair<std::int64_t, std::int64_t>> weight_profit,
                   std::int64_t capacity);
  // Keeps the given ids; used for sub-instances. Validation skips internal items.
  static KnapsackInstance from_items(std::vector<Item> items, std::int64_t capacity);

  const std::vector<Item>& items() const { return items_; }
  std::size_t n() const { return items_.size(); }
  std::int64_t capacity() const { return capacity_; }
  std::int64_t w_max() const { return w_max_; }
  std::int64_t p_max() const { return p_max_; }
  std::int64_t total_weight() const { return w_sum_; }
  std::int64_t total_profit() const { return p_sum_; }
  KnapsackInstance with_capacity(std::int64_t t) const { return from_items(items_, t); }

  // Stable content digest (FNV-1a over capacity and the (w, p) list).
  std::string digest() const;

 private:
  void recompute();
  std::vector<Item> items_;
  std::int64_t capacity_ = 0;
  std::int64_t w_max_ = 0, p_max_ = 0, w_sum_ = 0, p_sum_ = 0;
};

class Solution {
 public:
  Solution() = default;
  // Sorts and dedups ids, looks them up in `inst` by id, caches totals.
  Solution(const KnapsackInstance& inst, std::vector<std::size_t> ids);
  const std::vector<std::size_t>& indices() const { return ids_; }
  std::int64_t total_weight() const { return weight_; }
  std::int64_t total_profit() const { return profit_; }
  // Recomputes the totals from `inst` and compares with the cached ones.
  bool consistent_with(const KnapsackInstance& inst) const;

 private:
  std::vector<std::size_t> ids_;
  std::int64_t weight_ = 0, profit_ = 0;
};

struct NormalizeResult {
  KnapsackInstance residual;
  // Set when the instance is trivial: every remaining item fits.
  std::optional<std::int64_t> trivial_opt;
  std::vector<std::size_t> trivial_ids;
};

// Drops items heavier than t. The instance is trivial when t >= n * w_max or
// when all remaining items fit together.
NormalizeResult normalize(const KnapsackInstance& inst);

// Ratio comparison p_a/w_a > p_b/w_b by cross multiplication in 128 bits.
bool ratio_greater(const Item& a, const Item& b);
// Sorted by ratio non-increasing, ties by id.
std::vector<Item> sorted_by_ratio(std::span<const Item> items);

}  // namespace tk
