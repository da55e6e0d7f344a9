#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "tropknap/base/witness.hpp"
#include "tropknap/core/instance.hpp"
#include "tropknap/core/seed.hpp"
#include "tropknap/solver/plan.hpp"

namespace tk::solver {

struct BalancedOptions {
  int reps = 0;  // independent runs combined entrywise; 0 means ceil(log2 n) + 3
  // Profit solvers: capacities; weight solvers: profits. Defaults to
  // t +- sqrt(t w_max) (resp. OPT~ +- sqrt(OPT~ p_max)).
  std::optional<IntInterval> index_window;
  // Weight solvers only: weight range kept; defaults to t +- sqrt(t w_max).
  // Profit solvers derive theirs from greedy bounds at the window ends.
  std::optional<IntInterval> value_window;
  // Reject instances with (t / w_max) / (OPT~ / p_max) outside [1/r, r]; 0 disables.
  double max_imbalance = 0;
};

struct BalancedResult {
  base::Sense sense = base::Sense::profit;
  IntInterval index_window, value_window;
  // Entries on index_window; for weight solvers only those with values in value_window.
  MonotoneSeq seq;
  std::shared_ptr<base::WitnessTree> tree;
  base::NodeId node = -1;
  std::string path;  // "bellman", "tree" or "delegated"
  int q = 0;
  int reps = 0;
  std::int64_t opt_estimate = 0;
};

BalancedResult solve_balanced_tsqrtp(const KnapsackInstance& inst, const SeedCtx& seed, const BalancedOptions& opts = {});
BalancedResult solve_balanced_cuberoot(const KnapsackInstance& inst, const SeedCtx& seed, const BalancedOptions& opts = {});
BalancedResult solve_balanced_optsqrtw(const KnapsackInstance& inst, const SeedCtx& seed, const BalancedOptions& opts = {});
BalancedResult solve_balanced_cuberoot_sym(const KnapsackInstance& inst, const SeedCtx& seed, const BalancedOptions& opts = {});

// Default boosting count ceil(log2 n) + 3.
int default_reps(std::size_t n);

// Profit result: entry at capacity t. Weight result: largest profit index
// whose weight is <= t. Empty optional when the window does not contain it.
std::optional<std::int64_t> extract_opt(const BalancedResult& r, std::int64_t t);

}  // namespace tk::solver
