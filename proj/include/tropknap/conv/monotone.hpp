#pragma once

#include <cstdint>

#include "tropknap/conv/engine.hpp"
#include "tropknap/core/monotone_seq.hpp"
#include "tropknap/core/seed.hpp"

namespace tk::conv {

struct ConvOptions {
  enum class Mode { automatic, naive, counting, engine };
  Mode mode = Mode::automatic;
  // In automatic mode the engine runs only when sqrt(M) >= min_sqrt_m and
  // n * M >= min_nm; otherwise the cheaper of naive and counting is used.
  std::int64_t min_sqrt_m = 100;
  std::int64_t min_nm = std::int64_t{1} << 20;
  EngineStats* stats = nullptr;
  const EngineTrace* trace = nullptr;
  WorkBudget* budget = nullptr;
};

// Process-wide default used when callers pass no options (the CLI sets it).
ConvOptions& default_conv_options();

// Exact min-plus product. Both inputs monotone in the same direction, finite
// entries in [0, M], +inf allowed anywhere.
MonotoneSeq monotone_minplus_rect(const MonotoneSeq& a, const MonotoneSeq& b, std::int64_t M,
                                  const SeedCtx& seed, const ConvOptions& opts = default_conv_options());

// Max-plus through negate_shift: 2M - minplus(M - A, M - B). -inf allowed anywhere.
MonotoneSeq monotone_maxplus_rect(const MonotoneSeq& a, const MonotoneSeq& b, std::int64_t M,
                                  const SeedCtx& seed, const ConvOptions& opts = default_conv_options());

// Min-plus via the counting polynomial sum_i x^{A[i]} z^i: C[k] is the least
// x-degree present at z^k. O(nM log) time. Entries in [0, M] or +inf.
MonotoneSeq minplus_counting(const MonotoneSeq& a, const MonotoneSeq& b, std::int64_t M);

// Max-plus for A non-decreasing and B arbitrary, by halving: the halves of B
// that meet the lower half of A are replaced by their prefix maxima.
MonotoneSeq one_monotone_maxplus(const MonotoneSeq& a, const MonotoneSeq& b, std::int64_t M,
                                 const SeedCtx& seed, const ConvOptions& opts = default_conv_options());

}  // namespace tk::conv
