#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>

#include "tropknap/base/bellman.hpp"
#include "tropknap/harness/bench.hpp"
#include "tropknap/harness/brute.hpp"
#include "tropknap/harness/generate.hpp"
#include "tropknap/harness/io.hpp"
#include "tropknap/hardness/mpv.hpp"
#include "tropknap/solver/solve.hpp"

using namespace tk;
using nlohmann::ordered_json;

namespace {

constexpr int kMatch = 0, kMismatch = 1, kUsage = 2;

// Bellman is used up to this many table cells.
constexpr std::int64_t kBellmanCells = 400'000'000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::int64_t> oracle_opt(const KnapsackInstance& inst) {
  if (inst.n() <= harness::kBruteMaxN) return harness::brute_force_opt(inst).opt;
  if (static_cast<long double>(inst.n()) * static_cast<long double>(inst.capacity() + 1) > kBellmanCells)
    return std::nullopt;
  return base::bellman_profit_dp(inst.items(), inst.capacity()).seq.at(inst.capacity()).raw();
}

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

ordered_json interval_json(const IntInterval& w) { return ordered_json::array({w.lo, w.hi}); }

ordered_json seq_json(const MonotoneSeq& s) {
  ordered_json v = ordered_json::array();
  for (const ExtInt& x : s.values()) {
    if (x.finite()) v.push_back(x.raw());
    else v.push_back(x.is_pos_inf() ? "inf" : "-inf");
  }
  return {{"start", s.start()}, {"values", v}};
}

struct Common {
  std::uint64_t seed = 0;
  bool json = false;
};

ordered_json report_json(const harness::RunReport& r) {
  return {{"algo", r.algo},   {"n", r.n},         {"t", r.t},           {"w_max", r.w_max},
          {"p_max", r.p_max}, {"opt", r.opt},     {"millis", r.millis}, {"seed", r.seed},
          {"verdict", harness::verdict_name(r.verdict)}};
}

// One solver run plus optional oracle; writes a reproducer on mismatch.
harness::RunReport run_solver(const KnapsackInstance& inst, solver::Algo algo, const SeedCtx& seed, int reps,
                              bool oracle, solver::SolveResult* out = nullptr) {
  harness::RunReport r;
  r.n = static_cast<std::int64_t>(inst.n());
  r.t = inst.capacity();
  r.w_max = inst.w_max();
  r.p_max = inst.p_max();
  r.seed = seed.describe();
  r.digest = inst.digest();
  solver::SolveOptions so;
  so.reps = reps;
  auto t0 = std::chrono::steady_clock::now();
  auto res = solver::solve(inst, algo, seed, so);
  r.millis = millis_since(t0);
  r.algo = solver::algo_name(res.used);
  r.opt = res.opt;
  r.reps = reps > 0 ? reps : solver::default_reps(inst.n());
  if (oracle) {
    if (auto o = oracle_opt(inst)) {
      r.verdict = *o == res.opt ? harness::Verdict::match : harness::Verdict::mismatch;
      if (r.verdict == harness::Verdict::mismatch) {
        auto path = harness::write_reproducer("failures", r.algo, inst, seed,
                                              "reported " + std::to_string(res.opt) + " oracle " + std::to_string(*o));
        std::cerr << "mismatch, reproducer written to " << path.string() << '\n';
      }
    }
  }
  if (out) *out = std::move(res);
  return r;
}

int cmd_solve(const std::string& file, const std::string& algo_s, int reps, bool oracle, bool window,
              const Common& c) {
  auto inst = harness::parse_instance(file);
  auto algo = solver::parse_algo(algo_s);
  solver::SolveResult res;
  auto r = run_solver(inst, algo, SeedCtx(c.seed), reps, oracle, &res);
  if (c.json) {
    ordered_json j = report_json(r);
    if (window) {
      j["path"] = res.path;
      if (res.capacity_window) {
        j["capacity_window"] = interval_json(*res.capacity_window);
        j["profit_window"] = interval_json(*res.profit_window);
        j["medium_sequence"] = seq_json(res.medium_seq);
      }
      j["solution"] = res.solution.indices();
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "opt " << r.opt << "  algo " << r.algo << "  path " << res.path << "  " << r.millis << " ms  verdict "
              << harness::verdict_name(r.verdict) << '\n';
    if (window && res.capacity_window)
      std::cout << "capacity window [" << res.capacity_window->lo << ", " << res.capacity_window->hi
                << "]  profit window [" << res.profit_window->lo << ", " << res.profit_window->hi << "]\n"
                << "medium sequence " << res.medium_seq << '\n';
    std::cout << "items";
    for (auto id : res.solution.indices()) std::cout << ' ' << id;
    std::cout << '\n';
  }
  return r.verdict == harness::Verdict::mismatch ? kMismatch : kMatch;
}

int cmd_check(const std::string& file, int reps, const Common& c) {
  auto inst = harness::parse_instance(file);
  auto o = oracle_opt(inst);
  if (!o) throw UsageError("instance too large for the oracles");
  int code = kMatch;
  ordered_json all = ordered_json::array();
  for (auto a : {solver::Algo::bellman, solver::Algo::t_sqrt_p, solver::Algo::opt_sqrt_w, solver::Algo::cuberoot,
                 solver::Algo::cuberoot_sym}) {
    auto r = run_solver(inst, a, SeedCtx(c.seed), reps, true);
    if (r.verdict == harness::Verdict::mismatch) code = kMismatch;
    if (c.json) all.push_back(report_json(r));
    else
      std::cout << r.algo << ": opt " << r.opt << " oracle " << *o << "  " << harness::verdict_name(r.verdict) << '\n';
  }
  if (c.json) std::cout << all.dump() << '\n';
  return code;
}

int cmd_gen(std::size_t n, std::int64_t w_max, std::int64_t p_max, std::int64_t t, bool balanced,
            const std::string& out, const Common& c) {
  if (w_max < 1 || p_max < 1) throw UsageError("w_max and p_max must be positive");
  SeedCtx seed(c.seed);
  KnapsackInstance inst;
  if (balanced) inst = harness::gen_balanced_instance(n, w_max, p_max, seed);
  else {
    if (t < 0) throw UsageError("--t is required unless --balanced is given");
    inst = harness::gen_random_instance(n, w_max, p_max, t, seed);
  }
  if (out.empty()) harness::write_instance(std::cout, inst);
  else harness::write_instance(inst, out);
  return kMatch;
}

int cmd_conv(std::int64_t n, std::int64_t M, bool oracle, const Common& c) {
  if (n < 1 || M < 1) throw UsageError("n and M must be positive");
  conv::EngineStats st;
  bool ok = true;
  double ms = harness::time_conv_engine(n, M, SeedCtx(c.seed), &st, oracle, &ok);
  auto verdict = oracle ? (ok ? harness::Verdict::match : harness::Verdict::mismatch) : harness::Verdict::unchecked;
  if (c.json) {
    ordered_json j = {{"algo", "conv"}, {"n", n},         {"M", M},
                      {"millis", ms},   {"seed", SeedCtx(c.seed).describe()},
                      {"prime", st.prime}, {"verdict", harness::verdict_name(verdict)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "minplus n=" << n << " M=" << M << "  " << ms << " ms  prime " << st.prime << "  verdict "
              << harness::verdict_name(verdict) << '\n';
  }
  return verdict == harness::Verdict::mismatch ? kMismatch : kMatch;
}

int cmd_gadget(const std::string& kind, const std::string& mpv_file, std::int64_t n, const std::string& algo_s,
               const std::string& out, const Common& c) {
  hardness::MPVInstance m;
  if (!mpv_file.empty()) {
    std::ifstream in(mpv_file);
    if (!in) throw UsageError("cannot open " + mpv_file);
    m = hardness::read_mpv(in);
  } else {
    if (n < 2) throw UsageError("give --mpv or --n >= 2");
    m = harness::random_mpv(n, SeedCtx(c.seed));
  }
  KnapsackInstance inst;
  if (kind == "weights") inst = hardness::gadget_small_weights(m);
  else if (kind == "profits") inst = hardness::gadget_small_profits(m);
  else throw UsageError("--kind must be weights or profits");
  if (!out.empty()) harness::write_instance(inst, out);
  const std::int64_t nn = m.n();
  auto res = solver::solve(inst, solver::parse_algo(algo_s), SeedCtx(c.seed).child(1));
  const bool holds = hardness::verify_naive(m);
  const bool predicted = kind == "weights" ? res.opt <= 112 * nn * nn : res.opt < 112 * nn;
  const bool agree = holds == predicted;
  if (c.json) {
    ordered_json j = {{"kind", kind}, {"n", nn}, {"opt", res.opt}, {"verify", holds}, {"threshold_says", predicted},
                      {"verdict", agree ? "match" : "mismatch"}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "gadget " << kind << " n=" << nn << "  opt " << res.opt << "  verify " << holds << "  threshold "
              << predicted << "  " << (agree ? "match" : "mismatch") << '\n';
  }
  return agree ? kMatch : kMismatch;
}

int cmd_bench(const std::vector<std::string>& algos, std::vector<std::int64_t> sizes, int lg_from, int lg_to,
              int samples, bool oracle, const std::string& csv, const Common& c) {
  harness::BenchSuite suite;
  suite.algos = algos;
  if (sizes.empty())
    for (int k = lg_from; k <= lg_to; ++k) sizes.push_back(std::int64_t{1} << k);
  suite.sizes = sizes;
  suite.seed = c.seed;
  suite.samples = samples;
  suite.oracle_check = oracle;
  auto rep = harness::run_benchmark(suite);
  if (!csv.empty()) {
    std::ofstream f(csv);
    f << harness::to_csv(rep);
  }
  bool bad = false;
  for (const auto& r : rep.runs) bad |= r.verdict == harness::Verdict::mismatch;
  if (c.json) {
    ordered_json runs = ordered_json::array();
    for (const auto& r : rep.runs) runs.push_back(report_json(r));
    ordered_json sc = ordered_json::array();
    for (const auto& s : rep.scaling)
      sc.push_back({{"algo", s.algo}, {"sizes", s.sizes}, {"millis", s.millis}, {"slope", s.fit.slope}});
    std::cout << ordered_json{{"runs", runs}, {"scaling", sc}}.dump() << '\n';
  } else {
    for (const auto& s : rep.scaling) {
      std::cout << s.algo << '\n';
      for (std::size_t i = 0; i < s.sizes.size(); ++i) std::cout << "  n=" << s.sizes[i] << "  " << s.millis[i] << " ms\n";
      if (s.sizes.size() >= 2) std::cout << "  log-log slope " << s.fit.slope << '\n';
    }
  }
  return bad ? kMismatch : kMatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropknap: knapsack via bounded monotone tropical convolution"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--seed", c.seed, "root seed")->capture_default_str();
  app.add_flag("--json", c.json, "JSON output");

  std::string file, algo = "auto", out, kind = "weights", mpv, csv;
  int reps = 0, samples = 1, lg_from = 12, lg_to = 16;
  bool oracle = false, window = false, balanced = false;
  std::size_t n = 0;
  std::int64_t nn = 0, w_max = 0, p_max = 0, t = -1, M = 0;
  std::vector<std::string> algos{"conv"};
  std::vector<std::int64_t> sizes;

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("file", file)->required();
  solve->add_option("--algo", algo, "auto, bellman, t_sqrt_p, opt_sqrt_w, cuberoot, cuberoot_sym")->capture_default_str();
  solve->add_option("--reps", reps, "boosting repetitions, 0 for the default");
  solve->add_flag("--oracle-check", oracle, "compare against brute force or Bellman");
  solve->add_flag("--window", window, "emit the balancing windows and the medium sequence");

  auto* check = app.add_subcommand("check", "run every solver against the oracle");
  check->add_option("file", file)->required();
  check->add_option("--reps", reps);

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--n", n)->required();
  gen->add_option("--w-max", w_max)->required();
  gen->add_option("--p-max", p_max)->required();
  gen->add_option("--t", t, "capacity (random instances)");
  gen->add_flag("--balanced", balanced);
  gen->add_option("-o,--out", out);

  auto* convc = app.add_subcommand("conv", "time one engine min-plus product");
  convc->add_option("--n", nn)->required();
  convc->add_option("--M", M, "value bound, defaults to n");
  convc->add_flag("--oracle-check", oracle);

  auto* gadget = app.add_subcommand("gadget", "build and solve a convolution-verification gadget");
  gadget->add_option("--kind", kind, "weights or profits")->capture_default_str();
  gadget->add_option("--mpv", mpv, "verification instance file");
  gadget->add_option("--n", nn, "random verification instance of this size");
  gadget->add_option("--algo", algo)->capture_default_str();
  gadget->add_option("-o,--out", out, "write the knapsack instance");

  auto* bench = app.add_subcommand("bench", "scaling ladder");
  bench->add_option("--algos", algos)->capture_default_str()->delimiter(',');
  bench->add_option("--sizes", sizes)->delimiter(',');
  bench->add_option("--lg-from", lg_from)->capture_default_str();
  bench->add_option("--lg-to", lg_to)->capture_default_str();
  bench->add_option("--samples", samples)->capture_default_str();
  bench->add_flag("--oracle-check", oracle);
  bench->add_option("--csv", csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve) return cmd_solve(file, algo, reps, oracle, window, c);
    if (*check) return cmd_check(file, reps, c);
    if (*gen) return cmd_gen(n, w_max, p_max, t, balanced, out, c);
    if (*convc) return cmd_conv(nn, M > 0 ? M : nn, oracle, c);
    if (*gadget) return cmd_gadget(kind, mpv, nn, algo, out, c);
    if (*bench) return cmd_bench(algos, sizes, lg_from, lg_to, samples, oracle, csv, c);
  } catch (const harness::InstanceFormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
