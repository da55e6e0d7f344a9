#include "tropknap/balance/combine.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "tropknap/base/bellman.hpp"
#include "tropknap/base/merge.hpp"

namespace tk::balance {

BalancedSubproblem balance_reduce(const KnapsackInstance& inst, const SeedCtx& seed, int reps) {
  BalancedSubproblem s;
  s.part = max_prefix_partition(inst);
  if (!s.part.has_rho) throw std::invalid_argument("balance_reduce: empty instance");
  s.t = inst.capacity();
  s.w_max = inst.w_max();
  s.p_max = inst.p_max();
  std::int64_t wpm = 0, ppm = 0;
  for (const Item& it : s.part.prefix) {
    bool medium = std::any_of(s.part.medium.begin(), s.part.medium.end(), [&](const Item& m) { return m.id == it.id; });
    if (medium) wpm += it.weight, ppm += it.profit;
  }
  s.medium = KnapsackInstance::from_items(s.part.medium, wpm);
  s.capacity_window = intersect({wpm - 11 * s.w_max, wpm + 11 * s.w_max}, {0, s.t});
  s.profit_window = {std::max<std::int64_t>(ppm - 11 * s.p_max, 0), ppm + 11 * s.p_max};
  for (const Item& it : s.part.good) s.good_weight += it.weight, s.good_profit += it.profit;
  // No solution drops more than w(G) of good weight or carries more than t of bad weight.
  s.good_extent = std::min(10 * s.w_max, s.good_weight);
  s.good = good_complement_curve(s.part.good, s.good_extent, std::min(10 * s.p_max, s.good_profit), seed.child(1), reps);
  s.bad = bad_curve(s.part.bad, std::min(11 * s.w_max, s.t), 11 * s.p_max, seed.child(2), reps);
  return s;
}

MediumCurve medium_by_bellman(const BalancedSubproblem& sub) {
  auto tree = std::make_shared<base::WitnessTree>(base::Sense::profit);
  auto res = base::bellman_profit_dp(sub.medium.items(), sub.capacity_window.hi, tree.get());
  MediumCurve m;
  m.seq = clip_index(res.seq, sub.capacity_window);
  base::NodeId node = res.node;
  m.reconstruct = [tree, node](std::int64_t c) { return tree->reconstruct(node, c); };
  return m;
}

CombineResult combine_balanced(const BalancedSubproblem& sub, const MediumCurve& medium, const SeedCtx& seed,
                               bool reconstruct) {
  // Good part indexed by kept weight c_G = w(G) - ext + u.
  const std::int64_t ext = sub.good_extent;
  std::vector<ExtInt> gv(static_cast<std::size_t>(ext + 1));
  for (std::int64_t u = 0; u <= ext; ++u) {
    ExtInt l = sub.good.seq.at(ext - u);
    gv[static_cast<std::size_t>(u)] = l.finite() ? ExtInt(sub.good_profit - l.raw()) : ExtInt::neg_inf();
  }
  const std::int64_t gstart = sub.good_weight - ext;
  MonotoneSeq gc(gstart, std::move(gv), Direction::non_decreasing, Sentinel::neg_inf);
  MonotoneSeq pm = medium.seq.with_direction(Direction::non_decreasing).with_sentinel(Sentinel::neg_inf);
  MonotoneSeq c1 = base::tropical_product(gc, pm, base::Sense::profit, seed.child(1));
  MonotoneSeq c2 = base::tropical_product(c1, sub.bad.seq, base::Sense::profit, seed.child(2));
  // All three are "weight at most" sequences, so the entry at t is the optimum.
  ExtInt best = ExtInt::neg_inf();
  for (std::int64_t j = c2.start(); j <= std::min(c2.last(), sub.t); ++j) best = std::max(best, c2.at(j));
  if (!best.finite()) throw std::runtime_error("combine_balanced: no feasible split found");
  CombineResult r;
  r.opt = best.raw();
  if (!reconstruct) return r;
  std::int64_t k = c2.start();
  while (c2.at(k) != best) ++k;
  auto split = [](const MonotoneSeq& a, const MonotoneSeq& b, std::int64_t index, ExtInt value) {
    for (std::int64_t i = a.start(); i <= a.last(); ++i) {
      ExtInt x = a.at(i), y = b.at(index - i);
      if (x.finite() && y.finite() && x.raw() + y.raw() == value.raw()) return i;
    }
    throw std::logic_error("combine_balanced: no witness split");
  };
  std::int64_t j = split(c1, sub.bad.seq, k, best);
  std::int64_t cg = split(gc, pm, j, c1.at(j));
  std::int64_t cm = j - cg;
  std::vector<Item> removed = sub.good.reconstruct(sub.good_weight - cg);
  for (const Item& it : sub.part.good)
    if (std::none_of(removed.begin(), removed.end(), [&](const Item& x) { return x.id == it.id; })) r.items.push_back(it);
  for (const Item& it : medium.reconstruct(cm)) r.items.push_back(it);
  for (const Item& it : sub.bad.reconstruct(k - j)) r.items.push_back(it);
  return r;
}

}  // namespace tk::balance
