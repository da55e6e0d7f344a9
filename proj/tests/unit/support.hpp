#pragma once

#include <doctest.h>

#include <vector>

#include "tropknap/base/bellman.hpp"
#include "tropknap/core/instance.hpp"
#include "tropknap/core/monotone_seq.hpp"

namespace tk::test {

inline MonotoneSeq nd(std::initializer_list<ExtInt> v, Sentinel s = Sentinel::pos_inf, std::int64_t start = 0) {
  return MonotoneSeq::from(v, Direction::non_decreasing, s, start);
}

inline std::vector<std::int64_t> raw(const MonotoneSeq& s) {
  std::vector<std::int64_t> r;
  for (ExtInt x : s.values()) r.push_back(x.raw());
  return r;
}

inline KnapsackInstance inst(std::vector<std::pair<std::int64_t, std::int64_t>> items, std::int64_t t) {
  return KnapsackInstance(std::move(items), t);
}

// Bellman profit sequence on [0, k].
inline MonotoneSeq bellman_p(const KnapsackInstance& in, std::int64_t k) {
  return base::bellman_profit_dp(in.items(), k).seq;
}
inline MonotoneSeq bellman_w(const KnapsackInstance& in, std::int64_t k) {
  return base::bellman_weight_dp(in.items(), k).seq;
}

inline std::int64_t opt_of(const KnapsackInstance& in) { return bellman_p(in, in.capacity()).at(in.capacity()).raw(); }

}  // namespace tk::test
