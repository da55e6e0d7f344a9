#include "tropknap/base/merge.hpp"

#include <algorithm>
#include <stdexcept>

#include "tropknap/conv/monotone.hpp"

namespace tk::base {

namespace {

Sentinel sentinel_of(Sense s) { return s == Sense::profit ? Sentinel::neg_inf : Sentinel::pos_inf; }

struct Span {
  bool any = false;
  std::int64_t lo = 0, hi = 0;
};

Span finite_span(const MonotoneSeq& s) {
  Span r;
  for (ExtInt v : s.values()) {
    if (!v.finite()) continue;
    if (!r.any) r = {true, v.raw(), v.raw()};
    r.lo = std::min(r.lo, v.raw());
    r.hi = std::max(r.hi, v.raw());
  }
  return r;
}

MonotoneSeq shift_values(const MonotoneSeq& s, std::int64_t delta) {
  std::vector<ExtInt> v(s.values());
  for (ExtInt& x : v)
    if (x.finite()) x = ExtInt(x.raw() + delta);
  return MonotoneSeq(s.start(), std::move(v), Direction::non_decreasing, s.sentinel());
}

struct Run {
  std::int64_t lo, hi;  // absolute indices
  ExtInt value;
};

std::vector<Run> runs_of(const MonotoneSeq& s) {
  std::vector<Run> r;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::int64_t idx = s.start() + static_cast<std::int64_t>(i);
    if (!r.empty() && r.back().value == s.values()[i])
      r.back().hi = idx;
    else
      r.push_back({idx, idx, s.values()[i]});
  }
  return r;
}

// Product of step sequences, one candidate per run of `a`. With b
// non-decreasing the best index inside a run is its leftmost feasible one
// for max-plus and its rightmost feasible one for min-plus.
MonotoneSeq run_product(const std::vector<Run>& a, const MonotoneSeq& b, std::int64_t start, std::size_t len,
                        Sense sense) {
  const bool prof = sense == Sense::profit;
  std::vector<ExtInt> c(len, prof ? ExtInt::neg_inf() : ExtInt::pos_inf());
  const std::int64_t blo = b.start(), bhi = b.last();
  const std::vector<ExtInt>& bv = b.values();
  auto put = [&](std::int64_t k, ExtInt x) {
    ExtInt& slot = c[static_cast<std::size_t>(k - start)];
    if (prof ? x > slot : x < slot) slot = x;
  };
  for (const Run& r : a) {
    if (!r.value.finite()) continue;  // the absorbing infinity
    const std::int64_t v = r.value.raw();
    // Max-plus pairs b[j] with i = lo until j hits the top, then stays at b's last entry.
    // Min-plus pairs b[j] with i = hi, and before that keeps b's first entry.
    const std::int64_t anchor = prof ? r.lo : r.hi;
    for (std::size_t j = 0; j < bv.size(); ++j)
      if (bv[j].finite()) put(anchor + blo + static_cast<std::int64_t>(j), ExtInt(v + bv[j].raw()));
    const ExtInt edge = prof ? bv.back() : bv.front();
    if (!edge.finite()) continue;
    const ExtInt x(v + edge.raw());
    if (prof)
      for (std::int64_t k = r.lo + bhi + 1; k <= r.hi + bhi; ++k) put(k, x);
    else
      for (std::int64_t k = r.lo + blo; k < r.hi + blo; ++k) put(k, x);
  }
  return MonotoneSeq(start, std::move(c), Direction::non_decreasing, sentinel_of(sense));
}

}  // namespace

MonotoneSeq tropical_product(const MonotoneSeq& a, const MonotoneSeq& b, Sense sense, const SeedCtx& seed) {
  const Sentinel sent = sentinel_of(sense);
  if (a.empty() || b.empty()) return MonotoneSeq(0, {}, Direction::non_decreasing, sent);
  const std::int64_t start = a.start() + b.start();
  const std::size_t len = a.size() + b.size() - 1;
  Span sa = finite_span(a), sb = finite_span(b);
  if (!sa.any || !sb.any) {
    ExtInt fill = sense == Sense::profit ? ExtInt::neg_inf() : ExtInt::pos_inf();
    return MonotoneSeq(start, std::vector<ExtInt>(len, fill), Direction::non_decreasing, sent);
  }
  // Step sequences with few runs: one pass per run beats any generic product.
  std::vector<Run> ra = runs_of(a), rb = runs_of(b);
  const std::size_t shortest = std::min(a.size(), b.size());
  if (4 * std::min(ra.size(), rb.size()) <= shortest)
    return ra.size() <= rb.size() ? run_product(ra, b, start, len, sense) : run_product(rb, a, start, len, sense);
  const std::int64_t M = std::max(sa.hi - sa.lo, sb.hi - sb.lo);
  MonotoneSeq a0 = shift_values(a, -sa.lo).with_sentinel(sent);
  MonotoneSeq b0 = shift_values(b, -sb.lo).with_sentinel(sent);
  MonotoneSeq c = sense == Sense::profit ? conv::monotone_maxplus_rect(a0, b0, M, seed)
                                         : conv::monotone_minplus_rect(a0, b0, M, seed);
  return shift_values(c, sa.lo + sb.lo).with_sentinel(sent);
}

NodeId product_node(WitnessTree& tree, NodeId a, NodeId b, const SeedCtx& seed, IntInterval keep,
                    std::optional<std::int64_t> cap) {
  MonotoneSeq c = tropical_product(tree.seq(a), tree.seq(b), tree.sense(), seed);
  c = clip_index(c, keep);
  if (cap) c = saturate_above(c, *cap);
  return tree.add(WitnessTree::Conv{a, b}, std::move(c));
}

NodeId product_all(WitnessTree& tree, std::vector<NodeId> nodes, const SeedCtx& seed, IntInterval keep,
                   std::optional<std::int64_t> cap) {
  if (nodes.empty()) throw std::invalid_argument("product_all: no operands");
  std::uint64_t tag = 0;
  while (nodes.size() > 1) {
    std::vector<NodeId> next;
    for (std::size_t i = 0; i + 1 < nodes.size(); i += 2)
      next.push_back(product_node(tree, nodes[i], nodes[i + 1], seed.child(tag++), keep, cap));
    if (nodes.size() % 2) next.push_back(nodes.back());
    nodes = std::move(next);
  }
  return nodes[0];
}

NodeId best_of(WitnessTree& tree, std::vector<NodeId> nodes) {
  if (nodes.empty()) throw std::invalid_argument("best_of: no operands");
  if (nodes.size() == 1) return nodes[0];
  MonotoneSeq s = tree.seq(nodes[0]);
  for (std::size_t i = 1; i < nodes.size(); ++i)
    s = tree.sense() == Sense::profit ? pointwise_max(s, tree.seq(nodes[i])) : pointwise_min(s, tree.seq(nodes[i]));
  s = s.with_direction(Direction::non_decreasing).with_sentinel(sentinel_of(tree.sense()));
  return tree.add(WitnessTree::BestOf{std::move(nodes)}, std::move(s));
}

NodeId running_node(WitnessTree& tree, NodeId child, IntInterval out) {
  const MonotoneSeq& c = tree.seq(child);
  std::vector<ExtInt> v(static_cast<std::size_t>(out.length()));
  if (tree.sense() == Sense::profit) {
    ExtInt best = ExtInt::neg_inf();
    for (std::int64_t j = std::min(c.start(), out.lo); j <= out.hi; ++j) {
      best = std::max(best, c.at(j));
      if (j >= out.lo) v[static_cast<std::size_t>(j - out.lo)] = best;
    }
  } else {
    ExtInt best = ExtInt::pos_inf();
    for (std::int64_t j = std::max(c.last(), out.hi); j >= out.lo; --j) {
      best = std::min(best, c.at(j));
      if (j <= out.hi) v[static_cast<std::size_t>(j - out.lo)] = best;
    }
  }
  MonotoneSeq s(out.lo, std::move(v), Direction::non_decreasing, sentinel_of(tree.sense()));
  return tree.add(WitnessTree::Running{child}, std::move(s));
}

NodeId restricted_node(WitnessTree& tree, NodeId child, IntInterval index, IntInterval value) {
  MonotoneSeq s = restrict(tree.seq(child), index, value);
  return tree.add(WitnessTree::BestOf{{child}}, std::move(s));
}

}  // namespace tk::base
