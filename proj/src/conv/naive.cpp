#include "tropknap/conv/naive.hpp"

#include <algorithm>

namespace tk::conv {

Direction product_direction(const MonotoneSeq& a, const MonotoneSeq& b) {
  return a.direction() == b.direction() ? a.direction() : Direction::unknown;
}

namespace {

template <bool kMin>
MonotoneSeq naive(const MonotoneSeq& a, const MonotoneSeq& b) {
  Sentinel s = kMin ? Sentinel::pos_inf : Sentinel::neg_inf;
  if (a.empty() || b.empty()) return MonotoneSeq(0, {}, product_direction(a, b), s);
  ExtInt init = kMin ? ExtInt::pos_inf() : ExtInt::neg_inf();
  std::vector<ExtInt> c(a.size() + b.size() - 1, init);
  const auto& av = a.values();
  const auto& bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) {
    for (std::size_t j = 0; j < bv.size(); ++j) {
      ExtInt v = kMin ? add_minplus(av[i], bv[j]) : add_maxplus(av[i], bv[j]);
      ExtInt& slot = c[i + j];
      slot = kMin ? std::min(slot, v) : std::max(slot, v);
    }
  }
  return MonotoneSeq(a.start() + b.start(), std::move(c), product_direction(a, b), s);
}

}  // namespace

MonotoneSeq minplus_naive(const MonotoneSeq& a, const MonotoneSeq& b) { return naive<true>(a, b); }
MonotoneSeq maxplus_naive(const MonotoneSeq& a, const MonotoneSeq& b) { return naive<false>(a, b); }

}  // namespace tk::conv
