#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropknap/conv/engine.hpp"
#include "tropknap/core/seed.hpp"

namespace tk::harness {

enum class Verdict { match, mismatch, unchecked };
std::string verdict_name(Verdict v);

struct RunReport {
  std::string algo;
  std::string seed;    // seed path
  std::string digest;  // instance digest, or "conv-n-M" for convolution runs
  std::int64_t n = 0, t = 0, w_max = 0, p_max = 0, opt = 0;
  double millis = 0;
  int reps = 0;
  Verdict verdict = Verdict::unchecked;
};

struct SlopeFit {
  double slope = 0, intercept = 0;
};

// Least squares of log y against log x. Needs two distinct positive x values.
SlopeFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys);

struct BenchSuite {
  // "conv" or a solver name accepted by solver::parse_algo
  std::vector<std::string> algos;
  std::vector<std::int64_t> sizes;
  std::uint64_t seed = 0;
  int samples = 1;  // runs per size; the median time enters the fit
  bool oracle_check = false;
};

struct ScalingSummary {
  std::string algo;
  std::vector<std::int64_t> sizes;
  std::vector<double> millis;  // per size, median over samples
  SlopeFit fit;
};

struct BenchReport {
  std::vector<RunReport> runs;
  std::vector<ScalingSummary> scaling;
};

// Convolution runs use two random non-decreasing sequences of length n with
// M = n through the forced engine. Solver runs use balanced instances with
// w_max = p_max = n. The oracle for convolution is the naive product (only up
// to n = 4096), for solvers Bellman.
BenchReport run_benchmark(const BenchSuite& suite);

// Wall time of one forced-engine min-plus product of size n with bound M.
double time_conv_engine(std::int64_t n, std::int64_t M, const SeedCtx& seed, conv::EngineStats* stats = nullptr,
                        bool check = false, bool* matched = nullptr);

std::string to_csv(const BenchReport& report);

}  // namespace tk::harness
