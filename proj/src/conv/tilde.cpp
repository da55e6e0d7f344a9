#include "tropknap/conv/tilde.hpp"

#include <algorithm>
#include <stdexcept>

#include "tropknap/conv/residue.hpp"

namespace tk::conv {

std::vector<Run> constant_runs(const std::vector<std::int64_t>& a) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == kInf) continue;
    auto ii = static_cast<std::int64_t>(i);
    if (!runs.empty() && runs.back().hi == ii - 1 && runs.back().value == a[i])
      runs.back().hi = ii;
    else
      runs.push_back({ii, ii, a[i]});
  }
  return runs;
}

ChminTree::ChminTree(std::size_t n) : n_(n), size_(1) {
  while (size_ < n) size_ <<= 1;
  tag_.assign(2 * size_, kInf);
}

void ChminTree::chmin(std::size_t lo, std::size_t hi, std::int64_t v) {
  if (lo > hi || hi >= n_) throw std::out_of_range("ChminTree: bad range");
  // Bottom-up: tag the O(log n) canonical nodes covering [lo, hi].
  std::size_t l = lo + size_, r = hi + size_ + 1;
  while (l < r) {
    if (l & 1) {
      tag_[l] = std::min(tag_[l], v);
      ++l;
    }
    if (r & 1) {
      --r;
      tag_[r] = std::min(tag_[r], v);
    }
    l >>= 1;
    r >>= 1;
  }
}

std::vector<std::int64_t> ChminTree::collect() const {
  std::vector<std::int64_t> t = tag_;
  for (std::size_t i = 2; i < 2 * size_; ++i) t[i] = std::min(t[i], t[i / 2]);
  return std::vector<std::int64_t>(t.begin() + static_cast<std::ptrdiff_t>(size_),
                                   t.begin() + static_cast<std::ptrdiff_t>(size_ + n_));
}

std::vector<std::int64_t> tilde_convolution(const std::vector<Run>& a, std::size_t na,
                                            const std::vector<Run>& b, std::size_t nb) {
  if (na == 0 || nb == 0) return {};
  ChminTree tree(na + nb - 1);
  for (const Run& ra : a)
    for (const Run& rb : b)
      tree.chmin(static_cast<std::size_t>(ra.lo + rb.lo), static_cast<std::size_t>(ra.hi + rb.hi),
                 ra.value + rb.value);
  return tree.collect();
}

MonotoneSeq tilde_convolution(const MonotoneSeq& a, const MonotoneSeq& b) {
  auto raw = [](const MonotoneSeq& s) {
    std::vector<std::int64_t> v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.values()[i].is_neg_inf()) throw std::invalid_argument("tilde_convolution: -inf entry");
      v[i] = s.values()[i].raw();
    }
    return v;
  };
  if (a.empty() || b.empty()) return MonotoneSeq(0, {}, Direction::unknown, Sentinel::pos_inf);
  auto c = tilde_convolution(constant_runs(raw(a)), a.size(), constant_runs(raw(b)), b.size());
  return MonotoneSeq(a.start() + b.start(), std::vector<ExtInt>(c.begin(), c.end()),
                     a.direction() == b.direction() ? a.direction() : Direction::unknown,
                     Sentinel::pos_inf);
}

}  // namespace tk::conv
