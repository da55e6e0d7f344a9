// Acceptance checks, one per criterion: `acceptance <1..10>` or `acceptance all`.
// Prints one PASS/WARN/FAIL line per criterion; exit status 1 on FAIL.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tropknap/balance/combine.hpp"
#include "tropknap/base/bellman.hpp"
#include "tropknap/base/greedy.hpp"
#include "tropknap/base/merge.hpp"
#include "tropknap/base/window_dp.hpp"
#include "tropknap/conv/monotone.hpp"
#include "tropknap/conv/naive.hpp"
#include "tropknap/hardness/mpv.hpp"
#include "tropknap/harness/bench.hpp"
#include "tropknap/harness/brute.hpp"
#include "tropknap/harness/generate.hpp"
#include "tropknap/harness/io.hpp"
#include "tropknap/solver/solve.hpp"

using namespace tk;

namespace {

const char* kFailDir = "failures";

enum class Outcome { pass, warn, fail };

struct Tally {
  std::uint64_t cases = 0, bad = 0;
  std::string first;
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    if (bad++ == 0) first = what();
  }
  Outcome outcome() const { return bad ? Outcome::fail : Outcome::pass; }
  std::string summary() const {
    std::ostringstream os;
    os << cases << " checks";
    if (bad) os << ", " << bad << " failed; first: " << first;
    return os.str();
  }
};

struct Report {
  Outcome outcome;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

MonotoneSeq bellman_p(const KnapsackInstance& in, std::int64_t k) { return base::bellman_profit_dp(in.items(), k).seq; }
MonotoneSeq bellman_w(const KnapsackInstance& in, std::int64_t k) { return base::bellman_weight_dp(in.items(), k).seq; }
std::int64_t bellman_opt(const KnapsackInstance& in) { return bellman_p(in, in.capacity()).at(in.capacity()).raw(); }

std::string reproduce(const std::string& label, const KnapsackInstance& in, const SeedCtx& seed,
                      const std::string& note) {
  return harness::write_reproducer(kFailDir, label, in, seed, note).string();
}

const solver::Algo kSolvers[] = {solver::Algo::t_sqrt_p, solver::Algo::opt_sqrt_w, solver::Algo::cuberoot,
                                 solver::Algo::cuberoot_sym};

int boost_reps(std::size_t n) { return static_cast<int>(std::ceil(std::log2(std::max<double>(2.0, static_cast<double>(n))))) + 3; }

// Balanced instance with n <= 60 and t <= 2000.
KnapsackInstance small_balanced(const SeedCtx& seed) {
  Rng rng{seed};
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::size_t n = 2 + rng.below(59);
    std::int64_t wcap = std::min<std::int64_t>(60, 3900 / static_cast<std::int64_t>(n));
    auto in = harness::gen_balanced_instance(n, 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(wcap))),
                                             1 + static_cast<std::int64_t>(rng.below(60)), seed.child(attempt));
    if (in.capacity() <= 2000) return in;
  }
}

// 1: forced engine against the naive product, both directions, with sentinels.
Report criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  conv::ConvOptions opts;
  opts.mode = conv::ConvOptions::Mode::engine;
  const std::int64_t Ms[] = {4, 64, 512};
  Tally tally;
  for (Direction dir : {Direction::non_decreasing, Direction::non_increasing}) {
    for (std::uint64_t i = 0; i < 1200; ++i) {
      SeedCtx s = SeedCtx(1).child(static_cast<std::uint64_t>(dir), i);
      Rng rng{s};
      std::int64_t M = Ms[i % 3];
      std::size_t na = 1 + rng.below(256), nb = i % 4 == 0 ? na : 1 + rng.below(256);
      int inf_pct = i % 10 == 0 ? 100 : static_cast<int>(rng.below(40));
      bool maxplus = i % 2 == 1;
      Sentinel sent = maxplus ? Sentinel::neg_inf : Sentinel::pos_inf;
      auto a = harness::random_monotone(na, M, dir, sent, s.child(1), inf_pct);
      auto b = harness::random_monotone(nb, M, dir, sent, s.child(2), i % 7 == 0 ? 0 : inf_pct);
      MonotoneSeq got = maxplus ? conv::monotone_maxplus_rect(a, b, M, s.child(3), opts)
                                : conv::monotone_minplus_rect(a, b, M, s.child(3), opts);
      MonotoneSeq want = maxplus ? conv::maxplus_naive(a, b) : conv::minplus_naive(a, b);
      tally.check(got.same_entries(want), [&] {
        std::ostringstream os;
        os << (maxplus ? "max" : "min") << "-plus seed " << s.describe() << " na=" << na << " nb=" << nb << " M=" << M;
        return os.str();
      });
    }
  }
  double secs = seconds_since(t0);
  Report r{tally.outcome(), tally.summary()};
  if (secs > 300) r.outcome = Outcome::fail;
  r.detail += " in " + std::to_string(secs) + " s";
  return r;
}

// 2: one-monotone max-plus against the naive product.
Report criterion2() {
  conv::ConvOptions opts;
  opts.mode = conv::ConvOptions::Mode::engine;
  Tally tally;
  for (std::uint64_t i = 0; i < 1200; ++i) {
    SeedCtx s = SeedCtx(2).child(i);
    Rng rng{s};
    std::int64_t M = rng.between(0, 100);
    std::size_t na = 1 + rng.below(200), nb = i % 3 == 0 ? na : 1 + rng.below(200);
    auto a = harness::random_monotone(na, M, Direction::non_decreasing, Sentinel::neg_inf, s.child(1));
    auto b = harness::random_arbitrary(nb, M, s.child(2));
    auto got = conv::one_monotone_maxplus(a, b, M, s.child(3), opts);
    tally.check(got.same_entries(conv::maxplus_naive(a, b)), [&] {
      std::ostringstream os;
      os << "seed " << s.describe() << " na=" << na << " nb=" << nb << " M=" << M;
      return os.str();
    });
  }
  return {tally.outcome(), tally.summary()};
}

// 3: the four solvers, boosted, against Bellman and brute force.
Report criterion3() {
  Tally tally;
  for (solver::Algo algo : kSolvers) {
    const std::string name = solver::algo_name(algo);
    for (std::uint64_t i = 0; i < 400; ++i) {
      SeedCtx s = SeedCtx(3).child(static_cast<std::uint64_t>(algo), i);
      KnapsackInstance in;
      std::int64_t want;
      if (i < 200) {
        in = small_balanced(s.child(1));
        want = bellman_opt(in);
      } else {
        Rng rng{s};
        in = harness::gen_random_instance(1 + rng.below(18), 1 + static_cast<std::int64_t>(rng.below(100)),
                                          1 + static_cast<std::int64_t>(rng.below(100)), 0, s.child(1));
        want = harness::brute_force_opt(in).opt;
      }
      solver::SolveOptions o;
      o.reps = boost_reps(in.n());
      auto r = solver::solve(in, algo, s.child(2), o);
      tally.check(r.opt == want, [&] {
        return name + " seed " + s.describe() + " got " + std::to_string(r.opt) + " want " + std::to_string(want) +
               " -> " + reproduce("c3-" + name, in, s.child(2), "algo " + name);
      });
    }
  }
  return {tally.outcome(), tally.summary()};
}

// 4: solver windows equal Bellman's on the same windows.
Report criterion4() {
  using Fn = solver::BalancedResult (*)(const KnapsackInstance&, const SeedCtx&, const solver::BalancedOptions&);
  const std::pair<const char*, Fn> solvers[] = {{"t_sqrt_p", solver::solve_balanced_tsqrtp},
                                               {"cuberoot", solver::solve_balanced_cuberoot},
                                               {"opt_sqrt_w", solver::solve_balanced_optsqrtw},
                                               {"cuberoot_sym", solver::solve_balanced_cuberoot_sym}};
  Tally tally;
  std::uint64_t tag = 0;
  for (auto [name, fn] : solvers) {
    ++tag;
    for (std::uint64_t i = 0; i < 200; ++i) {
      SeedCtx s;
      NormalizeResult norm;
      for (std::uint64_t attempt = 0;; ++attempt) {
        s = SeedCtx(4).child(tag, i).child(attempt);
        norm = normalize(small_balanced(s.child(1)));
        if (!norm.trivial_opt) break;
      }
      const KnapsackInstance& in = norm.residual;
      solver::BalancedOptions o;
      o.reps = boost_reps(in.n());
      auto r = fn(in, s.child(2), o);
      MonotoneSeq full = r.sense == base::Sense::profit ? bellman_p(in, r.index_window.hi) : bellman_w(in, r.index_window.hi);
      bool ok = restrict(full, r.index_window, r.value_window)
                    .same_entries(restrict(r.seq, r.index_window, r.value_window));
      tally.check(ok, [&] {
        return std::string(name) + " seed " + s.describe() + " -> " +
               reproduce(std::string("c4-") + name, in, s.child(2), std::string("windows of ") + name);
      });
    }
  }
  return {tally.outcome(), tally.summary()};
}

// All optimal subsets (by id) of a small instance.
std::vector<std::vector<std::size_t>> all_optima(const KnapsackInstance& in) {
  std::int64_t best = -1;
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = in.n();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t w = 0, p = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        w += in.items()[i].weight;
        p += in.items()[i].profit;
      }
    if (w > in.capacity() || p < best) continue;
    if (p > best) out.clear();
    best = p;
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) ids.push_back(in.items()[i].id);
    out.push_back(std::move(ids));
  }
  return out;
}

// 5: balancing reduction.
Report criterion5() {
  Tally exact, params, close;
  for (std::uint64_t i = 0; i < 800; ++i) {
    // Redraw until the instance is not trivial.
    const bool small = i >= 500;
    SeedCtx s;
    NormalizeResult norm;
    for (std::uint64_t attempt = 0;; ++attempt) {
      s = SeedCtx(5).child(i, attempt);
      Rng rng{s};
      std::size_t n = small ? 1 + rng.below(15) : 2 + rng.below(59);
      auto raw = harness::gen_random_instance(n, 1 + static_cast<std::int64_t>(rng.below(60)),
                                              1 + static_cast<std::int64_t>(rng.below(60)), 0, s.child(1));
      norm = normalize(raw.with_capacity(1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(raw.total_weight())))));
      if (!norm.trivial_opt) break;
    }
    const KnapsackInstance& in = norm.residual;
    auto sub = balance::balance_reduce(in, s.child(2), boost_reps(in.n()));
    auto cr = balance::combine_balanced(sub, balance::medium_by_bellman(sub), s.child(3), true);
    std::int64_t want = small ? harness::brute_force_opt(in).opt : bellman_opt(in);
    exact.check(cr.opt == want, [&] {
      return "seed " + s.describe() + " got " + std::to_string(cr.opt) + " want " + std::to_string(want) + " -> " +
             reproduce("c5", in, s.child(2), "balancing");
    });
    bool shrunk = sub.medium.n() <= in.n() && sub.medium.capacity() <= in.capacity() &&
                  (sub.medium.n() == 0 || (sub.medium.w_max() <= in.w_max() && sub.medium.p_max() <= in.p_max()));
    params.check(shrunk, [&] { return "seed " + s.describe(); });
  }
  for (std::uint64_t i = 0; i < 400; ++i) {
    SeedCtx s = SeedCtx(5).child(1000 + i);
    Rng rng{s};
    auto raw = harness::gen_random_instance(1 + rng.below(12), 1 + static_cast<std::int64_t>(rng.below(40)),
                                            1 + static_cast<std::int64_t>(rng.below(40)), 0, s.child(1));
    auto norm = normalize(raw.with_capacity(1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(raw.total_weight())))));
    if (norm.trivial_opt) continue;
    const KnapsackInstance& in = norm.residual;
    auto part = balance::max_prefix_partition(in);
    for (const auto& z : all_optima(in)) {
      auto d = balance::deviation_from_prefix(part, z);
      close.check(d.weight <= 10 * in.w_max() && d.profit <= 10 * in.p_max(), [&] {
        return "seed " + s.describe() + " -> " + reproduce("c5-close", in, s, "deviation");
      });
    }
  }
  Outcome o = exact.bad || params.bad || close.bad ? Outcome::fail : Outcome::pass;
  return {o, "opt: " + exact.summary() + "; parameters: " + params.summary() + "; optimal sets near prefix: " +
                 close.summary()};
}

// 6: the two gadgets decide the verification problem.
Report criterion6() {
  Tally w, p;
  int yes = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    bool weights = i < 200;
    SeedCtx s = SeedCtx(6).child(i);
    Rng rng{s};
    std::int64_t n = 2 + static_cast<std::int64_t>(rng.below(weights ? 47 : 31));
    auto m = harness::random_mpv(n, s.child(1));
    bool v = hardness::verify_naive(m);
    yes += v;
    auto in = weights ? hardness::gadget_small_weights(m) : hardness::gadget_small_profits(m);
    auto r = solver::solve(in, solver::Algo::automatic, s.child(2));
    std::int64_t opt = bellman_opt(in);
    bool ok = r.opt == opt && (weights ? opt <= 112 * n * n : opt < 112 * n) == v;
    (weights ? w : p).check(ok, [&] {
      return "seed " + s.describe() + " n=" + std::to_string(n) + " -> " +
             reproduce(weights ? "c6-weights" : "c6-profits", in, s.child(2), "gadget");
    });
  }
  Outcome o = w.bad || p.bad ? Outcome::fail : Outcome::pass;
  return {o, "small weights: " + w.summary() + "; small profits: " + p.summary() + "; " + std::to_string(yes) +
                 " yes-instances"};
}

// 7: greedy sandwich on normalized instances.
Report criterion7() {
  Tally tally;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    SeedCtx s = SeedCtx(7).child(i);
    Rng rng{s};
    auto raw = harness::gen_random_instance(1 + rng.below(60), 1 + static_cast<std::int64_t>(rng.below(100)),
                                            1 + static_cast<std::int64_t>(rng.below(100)), 0, s.child(1));
    auto norm = normalize(raw.with_capacity(1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(raw.total_weight())))));
    if (norm.trivial_opt) continue;
    const KnapsackInstance& in = norm.residual;
    std::int64_t g = base::greedy_upper_bound(in), opt = bellman_opt(in), pm = in.p_max();
    bool ok = opt <= g && g <= opt + pm && pm <= g && g <= static_cast<std::int64_t>(in.n()) * pm;
    tally.check(ok, [&] { return "seed " + s.describe() + " -> " + reproduce("c7", in, s, "greedy bound"); });
  }
  return {tally.outcome(), tally.summary()};
}

// 8: windowed band DPs, boosted, against Bellman; the covering band unboosted.
Report criterion8() {
  Tally prof, wt, full;
  for (std::uint64_t i = 0; i < 400; ++i) {
    bool profit = i < 200;
    SeedCtx s = SeedCtx(8).child(i);
    Rng rng{s};
    auto in = harness::gen_balanced_instance(1 + rng.below(100), 1 + static_cast<std::int64_t>(rng.below(60)),
                                             1 + static_cast<std::int64_t>(rng.below(60)), s.child(1));
    std::int64_t center = profit ? in.capacity() : base::greedy_upper_bound(in);
    std::int64_t l = i % 5 == 0 ? center : rng.between(0, center);
    const int reps = boost_reps(in.n());
    base::WitnessTree tree(profit ? base::Sense::profit : base::Sense::weight);
    std::vector<base::NodeId> runs;
    base::BandReport rep;
    for (int r = 0; r < reps; ++r) {
      auto res = profit ? base::hexu_profit_window(in.items(), center, l, s.child(2, static_cast<std::uint64_t>(r)), tree, &rep)
                        : base::hexu_weight_window(in.items(), center, l, s.child(2, static_cast<std::uint64_t>(r)), tree, &rep);
      runs.push_back(res.node);
    }
    IntInterval win{std::max<std::int64_t>(center - l, 0), center + l};
    MonotoneSeq want = clip_index(profit ? bellman_p(in, center + l) : bellman_w(in, center + l), win);
    auto label = [&] {
      return std::string(profit ? "profit" : "weight") + " seed " + s.describe() + " l=" + std::to_string(l) + " -> " +
             reproduce(profit ? "c8-profit" : "c8-weight", in, s, "center " + std::to_string(center));
    };
    (profit ? prof : wt).check(clip_index(tree.seq(base::best_of(tree, runs)), win).same_entries(want), label);
    if (rep.full_band) full.check(clip_index(tree.seq(runs.front()), win).same_entries(want), label);
  }
  Outcome o = prof.bad || wt.bad || full.bad ? Outcome::fail : Outcome::pass;
  return {o, "profit windows: " + prof.summary() + "; weight windows: " + wt.summary() + "; covering band single run: " +
                 full.summary()};
}

// 9: every reported solution recomputes to the reported optimum.
Report criterion9() {
  Tally tally;
  const solver::Algo all[] = {solver::Algo::bellman, solver::Algo::t_sqrt_p, solver::Algo::opt_sqrt_w,
                              solver::Algo::cuberoot, solver::Algo::cuberoot_sym, solver::Algo::automatic};
  for (solver::Algo algo : all) {
    for (std::uint64_t i = 0; i < 150; ++i) {
      SeedCtx s = SeedCtx(9).child(static_cast<std::uint64_t>(algo), i);
      Rng rng{s};
      KnapsackInstance in = i % 2 ? small_balanced(s.child(1))
                                  : harness::gen_random_instance(1 + rng.below(80), 1 + static_cast<std::int64_t>(rng.below(200)),
                                                                 1 + static_cast<std::int64_t>(rng.below(200)), 0, s.child(1));
      if (i % 2 == 0)
        in = in.with_capacity(1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(in.total_weight() + 1))));
      std::string why;
      bool ok = true;
      try {
        auto r = solver::solve(in, algo, s.child(2));
        Solution again(in, r.solution.indices());
        ok = r.solution.consistent_with(in) && again.total_profit() == r.opt && again.total_weight() <= in.capacity() &&
             r.opt == bellman_opt(in);
        if (!ok) why = "got " + std::to_string(again.total_profit()) + "/" + std::to_string(r.opt);
      } catch (const std::exception& e) {
        ok = false;
        why = e.what();
      }
      tally.check(ok, [&] {
        return solver::algo_name(algo) + " seed " + s.describe() + " " + why + " -> " +
               reproduce("c9-" + solver::algo_name(algo), in, s.child(2), "reconstruction");
      });
    }
  }
  return {tally.outcome(), tally.summary()};
}

// 10: empirical exponent of the forced engine with M = n.
Report criterion10() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<double> xs, ys;
  std::ostringstream os;
  bool exact = true;
  for (int lg = 12; lg <= 16; ++lg) {
    const std::int64_t n = std::int64_t{1} << lg;
    std::vector<double> samples;
    for (std::uint64_t k = 0; k < 3; ++k) {
      bool matched = true;
      samples.push_back(harness::time_conv_engine(n, n, SeedCtx(10).child(static_cast<std::uint64_t>(lg), k), nullptr,
                                                  lg <= 12, &matched));
      exact = exact && matched;
    }
    std::sort(samples.begin(), samples.end());
    xs.push_back(static_cast<double>(n));
    ys.push_back(samples[1]);
    os << "n=" << n << ":" << static_cast<long>(samples[1]) << "ms ";
  }
  auto fit = harness::fit_loglog(xs, ys);
  double secs = seconds_since(t0);
  os << "slope " << fit.slope << " in " << secs << " s";
  Outcome o = fit.slope <= 1.75 ? Outcome::pass : fit.slope <= 1.9 ? Outcome::warn : Outcome::fail;
  if (!exact || secs > 600) o = Outcome::fail;
  if (!exact) os << "; engine output mismatch at n=4096";
  return {o, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Report()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                         criterion6, criterion7, criterion8, criterion9, criterion10};
  std::vector<int> which;
  std::string arg = argc > 1 ? argv[1] : "all";
  if (arg == "all") {
    for (int i = 1; i <= 10; ++i) which.push_back(i);
  } else {
    int k = 0;
    try {
      k = std::stoi(arg);
    } catch (const std::exception&) {
    }
    if (k < 1 || k > 10) {
      std::cerr << "usage: acceptance <1..10|all>\n";
      return 2;
    }
    which.push_back(k);
  }
  bool failed = false;
  for (int k : which) {
    Report r;
    try {
      r = criteria[static_cast<std::size_t>(k - 1)]();
    } catch (const std::exception& e) {
      r = {Outcome::fail, std::string("exception: ") + e.what()};
    }
    const char* tag = r.outcome == Outcome::pass ? "PASS" : r.outcome == Outcome::warn ? "WARN" : "FAIL";
    std::cout << tag << " criterion " << k << ": " << r.detail << std::endl;
    failed = failed || r.outcome == Outcome::fail;
  }
  return failed ? 1 : 0;
}
