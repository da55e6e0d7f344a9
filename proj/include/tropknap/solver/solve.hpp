#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tropknap/balance/combine.hpp"
#include "tropknap/core/instance.hpp"
#include "tropknap/core/seed.hpp"
#include "tropknap/solver/balanced.hpp"

namespace tk::solver {

enum class Algo { automatic, bellman, t_sqrt_p, opt_sqrt_w, cuberoot, cuberoot_sym };

std::string algo_name(Algo a);
Algo parse_algo(const std::string& name);  // throws std::invalid_argument

struct SolveOptions {
  int reps = 0;  // boosting count, 0 for ceil(log2 n) + 3
  bool reconstruct = true;
};

struct SolveResult {
  std::int64_t opt = 0;
  Solution solution;
  Algo used = Algo::bellman;
  std::string path;  // "trivial", "bellman" or "balanced/<medium path>"
  // Balanced path only: the windows handed to the medium solver and its output.
  std::optional<IntInterval> capacity_window, profit_window;
  MonotoneSeq medium_seq;
};

// Cost of each algorithm with logarithmic factors dropped: n t, t sqrt(p_max),
// OPT~ sqrt(w_max), (n w_max p_max)^(1/3) t^(2/3), (n w_max p_max)^(1/3) OPT~^(2/3).
// Ties go to Bellman.
Algo choose_algo(const KnapsackInstance& normalized);

// Profit sequence of the medium instance over the capacity window, solved by
// one of the four balanced solvers (weight solvers are converted).
balance::MediumCurve medium_by_solver(const balance::BalancedSubproblem& sub, Algo algo, const SeedCtx& seed,
                                      int reps, std::string* path = nullptr);

SolveResult solve(const KnapsackInstance& inst, Algo algo, const SeedCtx& seed, const SolveOptions& opts = {});

}  // namespace tk::solver
