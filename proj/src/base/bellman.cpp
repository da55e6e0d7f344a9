#include "tropknap/base/bellman.hpp"

#include <algorithm>
#include <stdexcept>

namespace tk::base {

SeqResult bellman_profit_dp(std::span<const Item> items, std::int64_t k, WitnessTree* tree) {
  if (k < 0) throw std::invalid_argument("bellman_profit_dp: negative index bound");
  if (tree && tree->sense() != Sense::profit) throw std::invalid_argument("bellman_profit_dp: tree sense");
  const auto cols = static_cast<std::size_t>(k + 1);
  std::vector<std::int64_t> P(cols, 0);
  BitTable take = tree ? BitTable(items.size(), cols) : BitTable();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::int64_t w = items[i].weight, p = items[i].profit;
    for (std::int64_t x = k; x >= w; --x) {
      std::int64_t cand = P[static_cast<std::size_t>(x - w)] + p;
      if (cand > P[static_cast<std::size_t>(x)]) {
        P[static_cast<std::size_t>(x)] = cand;
        if (tree) take.set(i, static_cast<std::size_t>(x));
      }
    }
  }
  MonotoneSeq seq(0, std::vector<ExtInt>(P.begin(), P.end()), Direction::non_decreasing, Sentinel::neg_inf);
  SeqResult r{seq, -1};
  if (tree) {
    WitnessTree::Table t{std::vector<Item>(items.begin(), items.end()), std::move(take),
                         std::vector<std::int64_t>(items.size(), 0)};
    r.node = tree->add(std::move(t), std::move(seq));
  }
  return r;
}

SeqResult bellman_weight_dp(std::span<const Item> items, std::int64_t k, WitnessTree* tree) {
  if (k < 0) throw std::invalid_argument("bellman_weight_dp: negative index bound");
  if (tree && tree->sense() != Sense::weight) throw std::invalid_argument("bellman_weight_dp: tree sense");
  const auto cols = static_cast<std::size_t>(k + 1);
  std::vector<std::int64_t> W(cols, ExtInt::kPosInf);
  W[0] = 0;
  BitTable take = tree ? BitTable(items.size(), cols) : BitTable();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::int64_t w = items[i].weight, p = items[i].profit;
    for (std::int64_t x = k; x >= 1; --x) {
      std::int64_t prev = W[static_cast<std::size_t>(std::max<std::int64_t>(x - p, 0))];
      if (prev == ExtInt::kPosInf) continue;
      std::int64_t cand = prev + w;
      if (cand < W[static_cast<std::size_t>(x)]) {
        W[static_cast<std::size_t>(x)] = cand;
        if (tree) take.set(i, static_cast<std::size_t>(x));
      }
    }
  }
  MonotoneSeq seq(0, std::vector<ExtInt>(W.begin(), W.end()), Direction::non_decreasing, Sentinel::pos_inf);
  SeqResult r{seq, -1};
  if (tree) {
    WitnessTree::Table t{std::vector<Item>(items.begin(), items.end()), std::move(take),
                         std::vector<std::int64_t>(items.size(), 0)};
    r.node = tree->add(std::move(t), std::move(seq));
  }
  return r;
}

}  // namespace tk::base
