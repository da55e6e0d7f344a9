#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tropknap/harness/bench.hpp"
#include "tropknap/harness/brute.hpp"
#include "tropknap/harness/budget.hpp"
#include "tropknap/harness/generate.hpp"
#include "tropknap/harness/io.hpp"

using namespace tk;
using namespace tk::harness;
using namespace tk::test;

namespace {

FormatError code_of(const std::string& text) {
  std::istringstream in(text);
  try {
    read_instance(in);
  } catch (const InstanceFormatError& e) {
    return e.code;
  }
  FAIL("no error for: " << text);
  return FormatError::unreadable;
}

}  // namespace

TEST_CASE("instance parsing") {
  std::istringstream ok("# example\n2 4\n\n2 3\n3 4  # second\n");
  auto in = read_instance(ok);
  CHECK(in.n() == 2);
  CHECK(in.capacity() == 4);
  CHECK(in.items()[1].weight == 3);
  CHECK(in.items()[1].profit == 4);
  CHECK(code_of("1 4\n0 3\n") == FormatError::non_positive);
  CHECK(code_of("1 4\n2 -3\n") == FormatError::non_positive);
  CHECK(code_of("2 4\n1 3\n") == FormatError::count_mismatch);
  CHECK(code_of("1 4\n1 3\n1 1\n") == FormatError::count_mismatch);
  CHECK(code_of("1 4\n1 x\n") == FormatError::malformed_line);
  CHECK(code_of("1 4\n1 2 3\n") == FormatError::malformed_line);
  CHECK(code_of("") == FormatError::malformed_line);
  CHECK_THROWS_AS(parse_instance("/nonexistent/instance.txt"), InstanceFormatError);
}

TEST_CASE("instance round trip") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto in = gen_random_instance(s % 40, 1000, 1000, static_cast<std::int64_t>(s * 7), SeedCtx(s));
    std::stringstream ss;
    write_instance(ss, in);
    auto back = read_instance(ss);
    CHECK(back.digest() == in.digest());
    CHECK(back.n() == in.n());
  }
  auto dir = std::filesystem::temp_directory_path() / "tk_unit_io";
  std::filesystem::remove_all(dir);
  auto in = gen_random_instance(5, 9, 9, 12, SeedCtx(3));
  auto path = write_reproducer(dir, "demo", in, SeedCtx(3).child(4), "note");
  CHECK(path.filename().string() == "demo-" + in.digest() + ".txt");
  std::ifstream f(path);
  std::string first;
  std::getline(f, first);
  CHECK(first.find("3/4") != std::string::npos);
  CHECK(parse_instance(path).digest() == in.digest());
  std::filesystem::remove_all(dir);
}

TEST_CASE("generators are deterministic") {
  CHECK(gen_random_instance(20, 50, 60, 100, SeedCtx(7)).digest() ==
        gen_random_instance(20, 50, 60, 100, SeedCtx(7)).digest());
  CHECK(gen_random_instance(20, 50, 60, 100, SeedCtx(7)).digest() !=
        gen_random_instance(20, 50, 60, 100, SeedCtx(8)).digest());
  CHECK(gen_balanced_instance(20, 50, 60, SeedCtx(7)).digest() == gen_balanced_instance(20, 50, 60, SeedCtx(7)).digest());
  CHECK(gen_random_instance(0, 5, 5, 3, SeedCtx(1)).n() == 0);
  auto one = gen_balanced_instance(1, 5, 5, SeedCtx(1));
  CHECK(one.n() == 1);
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto in = gen_random_instance(30, 40, 50, 0, SeedCtx(s));
    CHECK(in.w_max() <= 40);
    CHECK(in.p_max() <= 50);
    for (const Item& it : in.items()) {
      CHECK(it.weight >= 1);
      CHECK(it.profit >= 1);
    }
    auto b = gen_balanced_instance(2 + s % 60, 1 + static_cast<std::int64_t>(s % 50), 1 + static_cast<std::int64_t>(s % 37),
                                   SeedCtx(s));
    double r = balancedness(b);
    CHECK(r >= 0.125);
    CHECK(r <= 8.0);
    CHECK(b.capacity() == (b.total_weight() + 1) / 2);
  }
}

TEST_CASE("random sequences") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto up = random_monotone(40, 64, Direction::non_decreasing, Sentinel::pos_inf, SeedCtx(s), 10);
    CHECK(up.size() == 40);
    CHECK(up.finite_entries_monotone());
    for (ExtInt e : up.values()) CHECK((e.is_pos_inf() || (e.raw() >= 0 && e.raw() <= 64)));
    auto down = random_monotone(40, 64, Direction::non_increasing, Sentinel::neg_inf, SeedCtx(s));
    CHECK(down.finite_entries_monotone());
    auto any = random_arbitrary(40, 5, SeedCtx(s));
    for (ExtInt e : any.values()) CHECK((e.raw() >= 0 && e.raw() <= 5));
    auto m = random_mpv(6, SeedCtx(s));
    CHECK_NOTHROW(hardness::validate(m));
  }
}

TEST_CASE("brute force") {
  CHECK(brute_force_opt(inst({{2, 3}, {3, 4}, {4, 5}, {5, 6}}, 5)).opt == 7);
  CHECK(brute_force_opt(inst({}, 5)).opt == 0);
  auto r = brute_force_opt(inst({{2, 3}, {3, 4}, {4, 5}, {5, 6}}, 5));
  CHECK(r.solution.indices() == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(brute_force_opt(gen_random_instance(26, 5, 5, 10, SeedCtx(1))), std::length_error);
  for (std::uint64_t s = 0; s < 60; ++s) {
    auto in = gen_random_instance(15 + s % 11, 100, 100, 400, SeedCtx(s));
    auto b = brute_force_opt(in);
    CHECK(b.opt == opt_of(in));
    CHECK(b.solution.consistent_with(in));
    CHECK(b.solution.total_profit() == b.opt);
    CHECK(b.solution.total_weight() <= in.capacity());
  }
}

TEST_CASE("work budgets") {
  CHECK(budget_retries(1) == 1);
  CHECK(budget_retries(8) == 3);
  CHECK(budget_retries(9) == 4);
  CHECK(median_work({}) == 0);
  CHECK(median_work({5, 1, 3}) == 3);
  CHECK(median_work({4, 1, 3, 2}) == 3);
  auto op = [](const SeedCtx& seed, WorkBudget& b) {
    b.charge(100 + seed.key() % 10);
    return 7;
  };
  auto free = monte_carlo_budget(op, std::numeric_limits<double>::infinity(), 0, 16, SeedCtx(1));
  CHECK(free.value == 7);
  CHECK(free.attempts == 1);
  CHECK(free.work >= 100);
  CHECK_THROWS_AS(monte_carlo_budget(op, 0.5, 100, 16, SeedCtx(1)), BudgetExhausted);
  CHECK_THROWS_AS(monte_carlo_budget(op, 0.0, 100, 16, SeedCtx(1)), std::invalid_argument);
  std::uint64_t est = calibrate_work(op, SeedCtx(1));
  CHECK(est >= 100);
  CHECK(est < 110);
  auto ok = monte_carlo_budget(op, 2.0, est, 16, SeedCtx(1));
  CHECK(ok.attempts == 1);
  // Only odd attempts fit the budget.
  int calls = 0;
  auto flaky = [&](const SeedCtx&, WorkBudget& b) {
    b.charge(++calls % 2 ? 1000 : 10);
    return calls;
  };
  auto r = monte_carlo_budget(flaky, 1.0, 100, 16, SeedCtx(1));
  CHECK(r.attempts == 2);
  CHECK(r.value == 2);
}

TEST_CASE("log-log fit") {
  auto f = fit_loglog({1, 2, 4, 8}, {3, 12, 48, 192});
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(std::exp(f.intercept) == doctest::Approx(3.0));
  CHECK_THROWS(fit_loglog({4}, {1}));
  CHECK_THROWS(fit_loglog({4, 4}, {1, 2}));
}

TEST_CASE("benchmark driver") {
  BenchSuite empty;
  auto r0 = run_benchmark(empty);
  CHECK(r0.runs.empty());
  CHECK(r0.scaling.empty());
  BenchSuite s;
  s.algos = {"conv", "cuberoot"};
  s.sizes = {32, 64};
  s.oracle_check = true;
  auto r = run_benchmark(s);
  CHECK(r.runs.size() == 4);
  for (const auto& run : r.runs) CHECK(run.verdict == Verdict::match);
  REQUIRE(r.scaling.size() == 2);
  CHECK(r.scaling[0].millis.size() == 2);
  auto csv = to_csv(r);
  CHECK(csv.find("conv") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  bool matched = false;
  time_conv_engine(256, 256, SeedCtx(2), nullptr, true, &matched);
  CHECK(matched);
  CHECK(verdict_name(Verdict::mismatch) == "mismatch");
}
