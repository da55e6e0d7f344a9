#include "tropknap/harness/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tropknap/base/bellman.hpp"
#include "tropknap/conv/monotone.hpp"
#include "tropknap/conv/naive.hpp"
#include "tropknap/harness/generate.hpp"
#include "tropknap/solver/solve.hpp"

namespace tk::harness {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::unchecked: return "unchecked";
  }
  return "unchecked";
}

SlopeFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("fit_loglog: need two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0 || ys[i] <= 0) throw std::invalid_argument("fit_loglog: non-positive sample");
    double x = std::log(xs[i]), y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double den = k * sxx - sx * sx;
  if (std::abs(den) < 1e-12) throw std::invalid_argument("fit_loglog: x values coincide");
  SlopeFit f;
  f.slope = (k * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / k;
  return f;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

double time_conv_engine(std::int64_t n, std::int64_t M, const SeedCtx& seed, conv::EngineStats* stats, bool check,
                        bool* matched) {
  auto un = static_cast<std::size_t>(n);
  auto a = random_monotone(un, M, Direction::non_decreasing, Sentinel::pos_inf, seed.child(1));
  auto b = random_monotone(un, M, Direction::non_decreasing, Sentinel::pos_inf, seed.child(2));
  conv::ConvOptions opts;
  opts.mode = conv::ConvOptions::Mode::engine;
  opts.stats = stats;
  auto t0 = Clock::now();
  auto c = conv::monotone_minplus_rect(a, b, M, seed.child(3), opts);
  double ms = since(t0);
  if (check && matched) *matched = c.same_entries(conv::minplus_naive(a, b));
  return ms;
}

BenchReport run_benchmark(const BenchSuite& suite) {
  BenchReport rep;
  for (std::size_t ai = 0; ai < suite.algos.size(); ++ai) {
    const std::string& algo = suite.algos[ai];
    ScalingSummary sum;
    sum.algo = algo;
    for (std::int64_t n : suite.sizes) {
      std::vector<double> times;
      for (int s = 0; s < std::max(1, suite.samples); ++s) {
        SeedCtx seed = SeedCtx(suite.seed).child(ai, static_cast<std::uint64_t>(n)).child(static_cast<std::uint64_t>(s));
        RunReport r;
        r.algo = algo;
        r.seed = seed.describe();
        r.n = n;
        if (algo == "conv") {
          bool check = suite.oracle_check && n <= 4096, ok = true;
          r.millis = time_conv_engine(n, n, seed, nullptr, check, &ok);
          r.digest = "conv-" + std::to_string(n) + "-" + std::to_string(n);
          r.verdict = check ? (ok ? Verdict::match : Verdict::mismatch) : Verdict::unchecked;
        } else {
          auto a = solver::parse_algo(algo);
          auto inst = gen_balanced_instance(static_cast<std::size_t>(n), n, n, seed.child(1));
          r.digest = inst.digest();
          r.t = inst.capacity();
          r.w_max = inst.w_max();
          r.p_max = inst.p_max();
          solver::SolveOptions so;
          r.reps = so.reps = solver::default_reps(inst.n());
          auto t0 = Clock::now();
          auto res = solver::solve(inst, a, seed.child(2), so);
          r.millis = since(t0);
          r.opt = res.opt;
          if (suite.oracle_check) {
            auto b = base::bellman_profit_dp(inst.items(), inst.capacity());
            r.verdict = b.seq.at(inst.capacity()).raw() == res.opt ? Verdict::match : Verdict::mismatch;
          }
        }
        times.push_back(r.millis);
        rep.runs.push_back(r);
      }
      sum.sizes.push_back(n);
      sum.millis.push_back(median(times));
    }
    if (sum.sizes.size() >= 2) {
      std::vector<double> xs(sum.sizes.begin(), sum.sizes.end());
      std::vector<double> ys;
      for (double m : sum.millis) ys.push_back(std::max(m, 1e-3));
      sum.fit = fit_loglog(xs, ys);
    }
    rep.scaling.push_back(std::move(sum));
  }
  return rep;
}

std::string to_csv(const BenchReport& report) {
  std::ostringstream os;
  os << "algo,n,t,w_max,p_max,opt,millis,reps,seed,digest,verdict\n";
  for (const RunReport& r : report.runs)
    os << r.algo << ',' << r.n << ',' << r.t << ',' << r.w_max << ',' << r.p_max << ',' << r.opt << ',' << r.millis
       << ',' << r.reps << ',' << r.seed << ',' << r.digest << ',' << verdict_name(r.verdict) << '\n';
  return os.str();
}

}  // namespace tk::harness
