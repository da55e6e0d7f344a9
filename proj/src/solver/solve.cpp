#include "tropknap/solver/solve.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "tropknap/base/bellman.hpp"
#include "tropknap/base/greedy.hpp"

namespace tk::solver {

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::automatic: return "auto";
    case Algo::bellman: return "bellman";
    case Algo::t_sqrt_p: return "t_sqrt_p";
    case Algo::opt_sqrt_w: return "opt_sqrt_w";
    case Algo::cuberoot: return "cuberoot";
    case Algo::cuberoot_sym: return "cuberoot_sym";
  }
  return "?";
}

Algo parse_algo(const std::string& name) {
  for (Algo a : {Algo::automatic, Algo::bellman, Algo::t_sqrt_p, Algo::opt_sqrt_w, Algo::cuberoot, Algo::cuberoot_sym})
    if (algo_name(a) == name) return a;
  throw std::invalid_argument("unknown algorithm: " + name);
}

Algo choose_algo(const KnapsackInstance& inst) {
  const long double n = static_cast<long double>(inst.n()), t = static_cast<long double>(inst.capacity());
  const long double w = static_cast<long double>(inst.w_max()), p = static_cast<long double>(inst.p_max());
  const long double opt = static_cast<long double>(base::greedy_upper_bound(inst));
  const long double cube = std::cbrt(n * w * p);
  std::pair<long double, Algo> best{n * t, Algo::bellman};
  for (auto c : {std::pair{t * std::sqrt(p), Algo::t_sqrt_p}, std::pair{opt * std::sqrt(w), Algo::opt_sqrt_w},
                 std::pair{cube * std::pow(t, 2.0L / 3.0L), Algo::cuberoot},
                 std::pair{cube * std::pow(opt, 2.0L / 3.0L), Algo::cuberoot_sym}})
    if (c.first < best.first) best = c;
  return best.second;
}

balance::MediumCurve medium_by_solver(const balance::BalancedSubproblem& sub, Algo algo, const SeedCtx& seed,
                                      int reps, std::string* path) {
  const KnapsackInstance& m = sub.medium;
  const IntInterval cw = sub.capacity_window;
  BalancedOptions o;
  o.reps = reps;
  balance::MediumCurve out;
  if (algo == Algo::t_sqrt_p || algo == Algo::cuberoot) {
    o.index_window = cw;
    BalancedResult r = algo == Algo::t_sqrt_p ? solve_balanced_tsqrtp(m, seed, o) : solve_balanced_cuberoot(m, seed, o);
    if (path) *path = r.path;
    out.seq = r.seq;
    auto tree = r.tree;
    base::NodeId node = r.node;
    out.reconstruct = [tree, node](std::int64_t c) { return tree->reconstruct(node, c); };
    return out;
  }
  if (algo != Algo::opt_sqrt_w && algo != Algo::cuberoot_sym) throw std::invalid_argument("medium_by_solver: not a balanced solver");
  // Profits from just below OPT(c_lo) to just above OPT(c_hi); weights from
  // c_lo - w_max (an optimal set at c_lo weighs more) to c_hi.
  const std::int64_t glo = base::greedy_upper_bound(m.items(), cw.lo);
  const std::int64_t ghi = base::greedy_upper_bound(m.items(), cw.hi);
  o.index_window = IntInterval{std::max<std::int64_t>(glo - m.p_max(), 0), ghi + 1};
  o.value_window = IntInterval{std::max<std::int64_t>(cw.lo - m.w_max(), 0), cw.hi};
  BalancedResult r = algo == Algo::opt_sqrt_w ? solve_balanced_optsqrtw(m, seed, o) : solve_balanced_cuberoot_sym(m, seed, o);
  if (path) *path = r.path;
  // P[c] = largest profit index whose weight is <= c.
  std::vector<ExtInt> v(static_cast<std::size_t>(cw.length()), ExtInt::neg_inf());
  auto pick = std::make_shared<std::vector<std::int64_t>>(v.size(), -1);
  std::int64_t k = r.seq.start() - 1;
  for (std::int64_t c = cw.lo; c <= cw.hi; ++c) {
    while (k + 1 <= r.seq.last() && r.seq.at(k + 1) <= ExtInt(c)) ++k;
    if (k >= r.seq.start()) {
      v[static_cast<std::size_t>(c - cw.lo)] = ExtInt(k);
      (*pick)[static_cast<std::size_t>(c - cw.lo)] = k;
    }
  }
  out.seq = MonotoneSeq(cw.lo, std::move(v), Direction::non_decreasing, Sentinel::neg_inf);
  auto tree = r.tree;
  base::NodeId node = r.node;
  const std::int64_t lo = cw.lo;
  out.reconstruct = [tree, node, pick, lo](std::int64_t c) {
    return tree->reconstruct(node, (*pick).at(static_cast<std::size_t>(c - lo)));
  };
  return out;
}

SolveResult solve(const KnapsackInstance& inst, Algo algo, const SeedCtx& seed, const SolveOptions& opts) {
  SolveResult res;
  NormalizeResult norm = normalize(inst);
  if (norm.trivial_opt) {
    res.opt = *norm.trivial_opt;
    res.solution = Solution(inst, norm.trivial_ids);
    res.used = algo;
    res.path = "trivial";
    return res;
  }
  const KnapsackInstance& r = norm.residual;
  if (algo == Algo::automatic) algo = choose_algo(r);
  res.used = algo;
  const int reps = opts.reps > 0 ? opts.reps : default_reps(r.n());
  std::vector<std::size_t> ids;
  if (algo == Algo::bellman) {
    base::WitnessTree tree(base::Sense::profit);
    auto dp = base::bellman_profit_dp(r.items(), r.capacity(), opts.reconstruct ? &tree : nullptr);
    res.opt = dp.seq.at(r.capacity()).raw();
    res.path = "bellman";
    if (opts.reconstruct)
      for (const Item& it : tree.reconstruct(dp.node, r.capacity())) ids.push_back(it.id);
  } else {
    balance::BalancedSubproblem sub = balance::balance_reduce(r, seed.child(1), reps);
    std::string mpath;
    balance::MediumCurve mc = medium_by_solver(sub, algo, seed.child(2), reps, &mpath);
    balance::CombineResult cr = balance::combine_balanced(sub, mc, seed.child(3), opts.reconstruct);
    res.opt = cr.opt;
    res.path = "balanced/" + mpath;
    res.capacity_window = sub.capacity_window;
    res.profit_window = sub.profit_window;
    res.medium_seq = mc.seq;
    for (const Item& it : cr.items) ids.push_back(it.id);
  }
  if (opts.reconstruct) {
    res.solution = Solution(inst, ids);
    if (res.solution.total_profit() != res.opt || res.solution.total_weight() > inst.capacity() ||
        res.solution.indices().size() != ids.size())
      throw std::logic_error("solve: reconstructed solution does not realize the reported optimum");
  }
  return res;
}

}  // namespace tk::solver
