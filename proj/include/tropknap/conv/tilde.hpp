#pragma once

#include <cstdint>
#include <vector>

#include "tropknap/core/monotone_seq.hpp"

namespace tk::conv {

// Maximal index interval on which a sequence is constant and finite.
struct Run {
  std::int64_t lo, hi;
  std::int64_t value;
};

// Runs of a raw vector in which kInf marks missing entries.
std::vector<Run> constant_runs(const std::vector<std::int64_t>& a);

// Min-plus product of two step sequences given by their finite runs. The
// result has length na + nb - 1 with kInf where no pair exists. Each run pair
// becomes one range-chmin update on a segment tree.
std::vector<std::int64_t> tilde_convolution(const std::vector<Run>& a, std::size_t na,
                                            const std::vector<Run>& b, std::size_t nb);

// Convenience form on sequences (start indices are added).
MonotoneSeq tilde_convolution(const MonotoneSeq& a, const MonotoneSeq& b);

// Range chmin / point query tree over [0, n).
class ChminTree {
 public:
  explicit ChminTree(std::size_t n);
  void chmin(std::size_t lo, std::size_t hi, std::int64_t v);  // inclusive
  std::vector<std::int64_t> collect() const;

 private:
  std::size_t n_, size_;
  std::vector<std::int64_t> tag_;
};

}  // namespace tk::conv
