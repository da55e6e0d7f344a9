#include "tropknap/solver/balanced.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "tropknap/base/bellman.hpp"
#include "tropknap/base/bounded.hpp"
#include "tropknap/base/greedy.hpp"
#include "tropknap/base/merge.hpp"
#include "tropknap/base/window_dp.hpp"

namespace tk::solver {

using base::NodeId;
using base::Sense;
using base::WitnessTree;

int default_reps(std::size_t n) {
  int lg = n <= 1 ? 0 : std::bit_width(n - 1);
  return lg + 3;
}

namespace {

enum class Leaf { bounded, band };

std::int64_t isqrt_floor(long double x) { return static_cast<std::int64_t>(std::floor(std::sqrt(x))); }

IntInterval around(std::int64_t c, std::int64_t r) { return {std::max<std::int64_t>(c - r, 0), c + r}; }

struct Setup {
  Sense sense;
  std::vector<Item> items;
  std::size_t n;
  std::int64_t w_max, p_max;
  IntInterval index_window, value_window;
  std::int64_t t_center, opt_center;  // t and OPT~ used for the depth and delegation rules
  int reps;
};

Setup setup(const KnapsackInstance& inst, Sense sense, const BalancedOptions& opts) {
  Setup s{sense, inst.items(), inst.n(), inst.w_max(), inst.p_max(), {}, {}, 0, 0, 0};
  for (const Item& it : s.items)
    if (it.weight <= 0 || it.profit <= 0) throw std::invalid_argument("balanced solver: items need positive weight and profit");
  const std::int64_t t = inst.capacity();
  s.reps = opts.reps > 0 ? opts.reps : default_reps(s.n);
  if (sense == Sense::profit) {
    s.index_window = opts.index_window.value_or(around(t, isqrt_floor(static_cast<long double>(t) * s.w_max)));
    if (s.index_window.empty() || s.index_window.lo < 0) throw std::invalid_argument("balanced solver: bad capacity window");
    std::int64_t glo = base::greedy_upper_bound(s.items, s.index_window.lo);
    std::int64_t ghi = base::greedy_upper_bound(s.items, s.index_window.hi);
    s.value_window = {std::max<std::int64_t>(glo - s.p_max, 0), ghi};
    s.t_center = (s.index_window.lo + s.index_window.hi) / 2;
    s.opt_center = base::greedy_upper_bound(s.items, s.t_center);
  } else {
    std::int64_t g = base::greedy_upper_bound(s.items, t);
    s.index_window = opts.index_window.value_or(around(g, isqrt_floor(static_cast<long double>(g) * s.p_max)));
    s.value_window = opts.value_window.value_or(around(t, isqrt_floor(static_cast<long double>(t) * s.w_max)));
    if (s.index_window.empty() || s.index_window.lo < 0 || s.value_window.empty() || s.value_window.lo < 0)
      throw std::invalid_argument("balanced solver: bad windows");
    s.t_center = (s.value_window.lo + s.value_window.hi) / 2;
    s.opt_center = (s.index_window.lo + s.index_window.hi) / 2;
  }
  if (opts.max_imbalance > 0 && s.n > 0 && s.t_center > 0 && s.opt_center > 0) {
    long double r = (static_cast<long double>(s.t_center) / s.w_max) / (static_cast<long double>(s.opt_center) / s.p_max);
    if (r > opts.max_imbalance || r < 1.0L / opts.max_imbalance)
      throw std::invalid_argument("balanced solver: instance is not balanced; reduce it first");
  }
  return s;
}

BalancedResult shell(const Setup& s) {
  BalancedResult r;
  r.sense = s.sense;
  r.index_window = s.index_window;
  r.value_window = s.value_window;
  r.tree = std::make_shared<WitnessTree>(s.sense);
  r.reps = s.reps;
  r.opt_estimate = s.sense == Sense::profit ? base::greedy_upper_bound(s.items, s.t_center) : s.opt_center;
  return r;
}

void finish(BalancedResult& r, NodeId node) {
  MonotoneSeq seq = r.tree->seq(node);
  if (r.sense == Sense::profit) seq = clip_index(seq, r.index_window);
  else seq = restrict(seq, r.index_window, r.value_window);
  r.node = r.tree->add(WitnessTree::BestOf{{node}}, seq);
  r.seq = std::move(seq);
}

BalancedResult bellman(const Setup& s) {
  BalancedResult r = shell(s);
  r.path = "bellman";
  auto res = s.sense == Sense::profit ? base::bellman_profit_dp(s.items, s.index_window.hi, r.tree.get())
                                      : base::bellman_weight_dp(s.items, s.index_window.hi, r.tree.get());
  finish(r, base::restricted_node(*r.tree, res.node, s.index_window, s.sense == Sense::profit ? s.value_window
                                                                                               : s.value_window));
  return r;
}

// One run of the combination tree.
NodeId tree_run(const Setup& s, const TreeLevelPlan& plan, Leaf leaf, WitnessTree& tree, const SeedCtx& seed) {
  const std::size_t groups = std::size_t{1} << plan.q;
  std::vector<std::vector<Item>> part(groups);
  Rng rng(seed.child(0));
  for (const Item& it : s.items) part[rng.below(groups)].push_back(it);
  const auto q = static_cast<std::size_t>(plan.q);
  std::vector<NodeId> level;
  for (std::size_t j = 0; j < groups; ++j) {
    const SeedCtx ls = seed.child(1, j);
    NodeId d;
    if (leaf == Leaf::bounded) {
      d = s.sense == Sense::profit
              ? base::bc_profit_bounded(part[j], plan.index_base.hi, plan.value_base.hi, ls, tree).node
              : base::bc_weight_bounded(part[j], plan.index_base.hi, plan.value_base.hi, ls, tree).node;
    } else {
      const IntInterval w = plan.index_at[q];
      const std::int64_t c = (s.sense == Sense::profit ? s.t_center : s.opt_center) >> plan.q;
      d = s.sense == Sense::profit ? base::band_profit_dp(part[j], c, w, ls, tree).node
                                   : base::band_weight_dp(part[j], c, w, ls, tree).node;
    }
    level.push_back(base::restricted_node(tree, d, plan.index_at[q], plan.value_at[q]));
  }
  for (int l = plan.q - 1; l >= 0; --l) {
    std::vector<NodeId> next;
    for (std::size_t j = 0; j + 1 < level.size(); j += 2) {
      NodeId c = base::product_node(tree, level[j], level[j + 1], seed.child(2 + static_cast<std::uint64_t>(l), j));
      next.push_back(base::restricted_node(tree, c, plan.index_at[static_cast<std::size_t>(l)],
                                           plan.value_at[static_cast<std::size_t>(l)]));
    }
    level = std::move(next);
  }
  return base::restricted_node(tree, level[0], plan.index_final, plan.value_final);
}

BalancedResult boosted(const Setup& s, int q, Leaf leaf, const SeedCtx& seed) {
  BalancedResult r = shell(s);
  r.path = "tree";
  r.q = q;
  std::int64_t ispread, vspread;
  if (s.sense == Sense::profit) {
    ispread = s.index_window.hi * s.w_max;
    vspread = std::max<std::int64_t>(s.value_window.hi, 1) * s.p_max;
  } else {
    ispread = std::max<std::int64_t>(s.index_window.hi, 1) * s.p_max;
    vspread = s.value_window.hi * s.w_max;
  }
  TreeLevelPlan plan = make_plan(q, s.n, s.index_window, s.value_window, ispread, vspread);
  std::vector<NodeId> runs;
  for (int i = 0; i < s.reps; ++i) runs.push_back(tree_run(s, plan, leaf, *r.tree, seed.child(static_cast<std::uint64_t>(i))));
  finish(r, base::best_of(*r.tree, std::move(runs)));
  return r;
}

// Depth for the Õ(n + t sqrt(p_max)) solvers: 2^q <= min(t / w_max, OPT~ / p_max).
int plain_depth(const Setup& s) {
  long double b = std::min(static_cast<long double>(s.t_center) / s.w_max, static_cast<long double>(s.opt_center) / s.p_max);
  return b >= 1 ? largest_pow2_exponent(b, s.n) : 0;
}

bool tiny(const Setup& s, std::int64_t big) {
  const long double n = static_cast<long double>(s.n);
  return s.n < 10 || n * n * n <= 2.0L * static_cast<long double>(big);
}

BalancedResult plain(const KnapsackInstance& inst, Sense sense, const SeedCtx& seed, const BalancedOptions& opts) {
  Setup s = setup(inst, sense, opts);
  if (tiny(s, sense == Sense::profit ? s.p_max : s.w_max)) return bellman(s);
  return boosted(s, plain_depth(s), Leaf::bounded, seed);
}

BalancedResult cube(const KnapsackInstance& inst, Sense sense, const SeedCtx& seed, const BalancedOptions& opts) {
  Setup s = setup(inst, sense, opts);
  // Roles swap between the two senses: (t, w_max, p_max) <-> (OPT~, p_max, w_max).
  const long double T = static_cast<long double>(sense == Sense::profit ? s.t_center : s.opt_center);
  const long double O = static_cast<long double>(sense == Sense::profit ? s.opt_center : s.t_center);
  const long double a = static_cast<long double>(sense == Sense::profit ? s.w_max : s.p_max);
  const long double b = static_cast<long double>(sense == Sense::profit ? s.p_max : s.w_max);
  const long double n = static_cast<long double>(s.n);
  if (tiny(s, static_cast<std::int64_t>(b))) return bellman(s);
  const long double c = std::min(1.0L, (O / b) * (a / std::max(T, 1.0L)));
  if (n >= c * T * std::sqrt(b) / a) {
    BalancedResult r = boosted(s, plain_depth(s), Leaf::bounded, seed);
    r.path = "delegated";
    return r;
  }
  long double bound = std::max(1.0L, std::pow(n, 4.0L / 3.0L) * std::cbrt(a / std::max(T, 1.0L)) * std::pow(b, -2.0L / 3.0L));
  int q = std::min(largest_pow2_exponent(bound, s.n), plain_depth(s));
  return boosted(s, q, Leaf::band, seed);
}

}  // namespace

BalancedResult solve_balanced_tsqrtp(const KnapsackInstance& inst, const SeedCtx& seed, const BalancedOptions& opts) {
  return plain(inst, Sense::profit, seed, opts);
}

BalancedResult solve_balanced_cuberoot(const KnapsackInstance& inst, const SeedCtx& seed, const BalancedOptions& opts) {
  return cube(inst, Sense::profit, seed, opts);
}

BalancedResult solve_balanced_optsqrtw(const KnapsackInstance& inst, const SeedCtx& seed, const BalancedOptions& opts) {
  return plain(inst, Sense::weight, seed, opts);
}

BalancedResult solve_balanced_cuberoot_sym(const KnapsackInstance& inst, const SeedCtx& seed, const BalancedOptions& opts) {
  return cube(inst, Sense::weight, seed, opts);
}

std::optional<std::int64_t> extract_opt(const BalancedResult& r, std::int64_t t) {
  if (r.sense == Sense::profit) {
    if (!r.index_window.contains(t)) return std::nullopt;
    ExtInt v = r.seq.at(t);
    if (!v.finite()) return std::nullopt;
    return v.raw();
  }
  // Largest k with W[k] <= t, by binary search over the non-decreasing window.
  const auto& v = r.seq.values();
  auto it = std::partition_point(v.begin(), v.end(), [&](ExtInt x) { return x <= ExtInt(t); });
  if (it == v.begin()) return std::nullopt;
  return r.seq.start() + (it - v.begin()) - 1;
}

}  // namespace tk::solver
