#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tropknap/core/instance.hpp"

namespace tk::hardness {

// Bounded min-plus convolution verification: a, b of length n, c of length
// 2n - 1, entries in [0, n]. The question is whether c[i + j] <= a[i] + b[j]
// for all i, j.
struct MPVInstance {
  std::vector<std::int64_t> a, b, c;
  std::int64_t n() const { return static_cast<std::int64_t>(a.size()); }
};

// Throws std::invalid_argument on wrong lengths or entries outside [0, n].
void validate(const MPVInstance& m);

bool verify_naive(const MPVInstance& m);

// x[i] + i n for each array; non-decreasing since entries lie in [0, n].
std::vector<std::int64_t> monotonized(const std::vector<std::int64_t>& x, std::int64_t n);

// 4n - 1 items, t = 35n: verification holds iff OPT <= 112 n^2. Needs n >= 2.
KnapsackInstance gadget_small_weights(const MPVInstance& m);
// Same with indices and values swapped, t = 35n^2 - 1: holds iff OPT < 112 n.
KnapsackInstance gadget_small_profits(const MPVInstance& m);

// Text format: n, then the 3n - 1 entries of a, b, c, whitespace separated.
MPVInstance read_mpv(std::istream& in);
void write_mpv(std::ostream& out, const MPVInstance& m);

}  // namespace tk::hardness
