#include "support.hpp"

#include "tropknap/base/greedy.hpp"
#include "tropknap/harness/brute.hpp"
#include "tropknap/harness/generate.hpp"
#include "tropknap/solver/solve.hpp"

using namespace tk;
using namespace tk::solver;
using namespace tk::test;

namespace {

using BalancedFn = BalancedResult (*)(const KnapsackInstance&, const SeedCtx&, const BalancedOptions&);

struct Named {
  const char* name;
  BalancedFn fn;
};

const Named kBalanced[] = {{"t_sqrt_p", solve_balanced_tsqrtp},
                           {"cuberoot", solve_balanced_cuberoot},
                           {"opt_sqrt_w", solve_balanced_optsqrtw},
                           {"cuberoot_sym", solve_balanced_cuberoot_sym}};

// Bellman's sequence restricted to the solver's windows.
MonotoneSeq oracle_window(const KnapsackInstance& in, const BalancedResult& r) {
  MonotoneSeq full = r.sense == base::Sense::profit ? bellman_p(in, r.index_window.hi) : bellman_w(in, r.index_window.hi);
  return restrict(full, r.index_window, r.value_window);
}

}  // namespace

TEST_CASE("default boosting count") {
  CHECK(default_reps(1) == 3);
  CHECK(default_reps(2) == 4);
  CHECK(default_reps(60) == 9);
  CHECK(default_reps(64) == 9);
  CHECK(default_reps(65) == 10);
}

TEST_CASE("balanced solvers reproduce Bellman on their windows") {
  for (const Named& s : kBalanced) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      Rng rng{SeedCtx(seed)};
      auto in = harness::gen_balanced_instance(2 + rng.below(59), 1 + static_cast<std::int64_t>(rng.below(40)),
                                               1 + static_cast<std::int64_t>(rng.below(40)), SeedCtx(seed).child(1));
      auto norm = normalize(in);
      if (norm.trivial_opt) continue;
      BalancedResult r = s.fn(norm.residual, SeedCtx(seed).child(2), {});
      CHECK_MESSAGE(restrict(r.seq, r.index_window, r.value_window).same_entries(oracle_window(norm.residual, r)),
                    s.name << " seed " << seed << " path " << r.path);
      auto opt = extract_opt(r, norm.residual.capacity());
      REQUIRE_MESSAGE(opt.has_value(), s.name << " seed " << seed);
      CHECK(*opt == opt_of(norm.residual));
    }
  }
}

TEST_CASE("balanced solvers honour explicit windows") {
  auto in = harness::gen_balanced_instance(40, 30, 30, SeedCtx(5));
  auto norm = normalize(in);
  REQUIRE_FALSE(norm.trivial_opt);
  const auto& r0 = norm.residual;
  std::int64_t t = r0.capacity();
  BalancedOptions o;
  o.index_window = IntInterval{t / 2, t};
  auto r = solve_balanced_tsqrtp(r0, SeedCtx(1), o);
  CHECK(r.index_window.lo == t / 2);
  CHECK(r.index_window.hi == t);
  CHECK(restrict(r.seq, r.index_window, r.value_window).same_entries(oracle_window(r0, r)));
  std::int64_t g = base::greedy_upper_bound(r0);
  BalancedOptions w;
  w.index_window = IntInterval{g / 2, g};
  w.value_window = IntInterval{0, t};
  auto rw = solve_balanced_optsqrtw(r0, SeedCtx(1), w);
  CHECK(rw.sense == base::Sense::weight);
  CHECK(restrict(rw.seq, rw.index_window, rw.value_window).same_entries(oracle_window(r0, rw)));
  CHECK(extract_opt(rw, t) == opt_of(r0));
}

TEST_CASE("extract_opt outside the window") {
  BalancedResult r;
  r.sense = base::Sense::profit;
  r.index_window = {3, 5};
  r.seq = nd({ExtInt(1), ExtInt(2), ExtInt(4)}, Sentinel::neg_inf, 3);
  CHECK(extract_opt(r, 4) == 2);
  CHECK_FALSE(extract_opt(r, 7).has_value());
}

TEST_CASE("algorithm names") {
  for (Algo a : {Algo::automatic, Algo::bellman, Algo::t_sqrt_p, Algo::opt_sqrt_w, Algo::cuberoot, Algo::cuberoot_sym})
    CHECK(parse_algo(algo_name(a)) == a);
  CHECK_THROWS_AS(parse_algo("fastest"), std::invalid_argument);
}

TEST_CASE("choose_algo picks the cheapest bound") {
  // Tiny capacity: Bellman's n t wins.
  CHECK(choose_algo(inst({{1, 1000}, {1, 999}, {1, 998}}, 2)) == Algo::bellman);
  // Huge capacity with tiny profits: t sqrt(p) loses to the profit-indexed bound.
  std::vector<std::pair<std::int64_t, std::int64_t>> items;
  for (int i = 0; i < 50; ++i) items.push_back({100000 + i, 1});
  Algo a = choose_algo(inst(items, 1000000));
  CHECK((a == Algo::opt_sqrt_w || a == Algo::cuberoot_sym));
}

TEST_CASE("solve edge cases") {
  for (Algo a : {Algo::bellman, Algo::t_sqrt_p, Algo::opt_sqrt_w, Algo::cuberoot, Algo::cuberoot_sym, Algo::automatic}) {
    auto empty = solve(inst({}, 5), a, SeedCtx(1));
    CHECK(empty.opt == 0);
    CHECK(empty.solution.indices().empty());
    auto zero = solve(inst({{1, 3}, {2, 4}}, 0), a, SeedCtx(1));
    CHECK(zero.opt == 0);
    auto single = solve(inst({{3, 7}}, 3), a, SeedCtx(1));
    CHECK(single.opt == 7);
    CHECK(single.path == "trivial");
    auto heavy = solve(inst({{4, 7}}, 3), a, SeedCtx(1));
    CHECK(heavy.opt == 0);
    auto pick = solve(inst({{2, 3}, {3, 4}, {4, 5}, {5, 6}}, 5), a, SeedCtx(1));
    CHECK(pick.opt == 7);
    CHECK(pick.solution.indices() == std::vector<std::size_t>{0, 1});
  }
}

TEST_CASE("solve matches brute force and Bellman") {
  for (Algo a : {Algo::t_sqrt_p, Algo::opt_sqrt_w, Algo::cuberoot, Algo::cuberoot_sym, Algo::automatic}) {
    for (std::uint64_t s = 0; s < 40; ++s) {
      Rng rng{SeedCtx(s)};
      KnapsackInstance in =
          s % 2 ? harness::gen_random_instance(1 + rng.below(18), 1 + static_cast<std::int64_t>(rng.below(50)),
                                               1 + static_cast<std::int64_t>(rng.below(50)), 0, SeedCtx(s).child(1))
                : harness::gen_balanced_instance(2 + rng.below(50), 1 + static_cast<std::int64_t>(rng.below(40)),
                                                 1 + static_cast<std::int64_t>(rng.below(40)), SeedCtx(s).child(1));
      std::int64_t want = in.n() <= 18 ? harness::brute_force_opt(in).opt : opt_of(in);
      auto r = solve(in, a, SeedCtx(s).child(2));
      CHECK_MESSAGE(r.opt == want, algo_name(a) << " seed " << s << " path " << r.path);
      CHECK(r.solution.consistent_with(in));
      CHECK(r.solution.total_profit() == r.opt);
      CHECK(r.solution.total_weight() <= in.capacity());
      if (r.path.rfind("balanced/", 0) == 0) {
        REQUIRE(r.capacity_window.has_value());
        CHECK(r.capacity_window->hi <= in.capacity());
      }
    }
  }
}

TEST_CASE("solve without reconstruction") {
  auto in = harness::gen_balanced_instance(30, 20, 20, SeedCtx(9));
  SolveOptions o;
  o.reconstruct = false;
  auto r = solve(in, Algo::cuberoot, SeedCtx(3), o);
  CHECK(r.opt == opt_of(in));
  CHECK(r.solution.indices().empty());
}

TEST_CASE("tree plan") {
  CHECK(plan_eta(1) == 0);
  CHECK(plan_eta(8) == 51);
  CHECK(largest_pow2_exponent(9.5L, 100) == 3);
  CHECK(largest_pow2_exponent(1000.0L, 5) == 2);
  auto p = make_plan(2, 16, {100, 120}, {50, 60}, 400, 300);
  REQUIRE(p.index_at.size() == 3);
  CHECK(p.index_at[0].lo <= 100);
  CHECK(p.index_at[0].hi >= 120);
  for (const auto& w : p.index_at) CHECK(w.lo >= 0);
  CHECK(p.index_base.lo == 0);
  CHECK(p.index_base.hi == p.index_at[2].hi);
}
