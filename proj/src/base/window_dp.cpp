#include "tropknap/base/window_dp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tropknap/base/merge.hpp"

namespace tk::base {

std::int64_t band_delta(std::size_t n, std::int64_t center, std::int64_t big, std::int64_t l) {
  long double nl = static_cast<long double>(n) * static_cast<long double>(l);
  long double lg = std::log(std::max<long double>(nl, 2.0L));
  long double r = 4.0L * std::sqrt(static_cast<long double>(center) * static_cast<long double>(big) * lg);
  return l + static_cast<std::int64_t>(std::ceil(r));
}

namespace {

struct Band {
  std::int64_t lo, hi;
  std::int64_t width() const { return hi - lo + 1; }
};

// Exact-index semantics: row k holds the best value of subsets of the first
// k items whose key sum equals the index. Reads outside the band are
// infinite; the caller folds the last row into <=/>= form.
SeqResult band_dp(std::span<const Item> items, std::int64_t center, IntInterval window, const SeedCtx& seed,
                  WitnessTree& tree, BandReport* report) {
  const bool prof = tree.sense() == Sense::profit;
  if (window.empty()) throw std::invalid_argument("band dp: empty window");
  if (center < 0) throw std::invalid_argument("band dp: negative center");
  const IntInterval out{std::max<std::int64_t>(window.lo, 0), window.hi};
  if (out.empty()) throw std::invalid_argument("band dp: window below 0");
  std::vector<Item> perm(items.begin(), items.end());
  Rng(seed.child(0)).shuffle(perm);
  const std::size_t n = perm.size();
  std::int64_t big = 0;
  for (const Item& it : perm) big = std::max(big, prof ? it.weight : it.profit);
  const std::int64_t l = std::max(center - window.lo, window.hi - center);
  const std::int64_t delta = band_delta(std::max<std::size_t>(n, 1), center, big, std::max<std::int64_t>(l, 0));
  const bool full = delta >= center;
  if (report) *report = {delta, full};
  // Largest index the last row needs: profit windows read down from the
  // top of the window; weight windows may overshoot by one item's profit.
  const std::int64_t top = prof ? out.hi : (full ? out.hi + big : center + delta);

  std::vector<Band> band(n + 1);
  band[0] = {0, 0};
  for (std::size_t k = 1; k <= n; ++k) {
    if (full) {
      band[k] = {0, top};
      continue;
    }
    std::int64_t c = static_cast<std::int64_t>(static_cast<__int128>(center) * static_cast<__int128>(k) /
                                               static_cast<__int128>(n));
    band[k] = {std::max<std::int64_t>(c - delta, 0), std::min(c + delta, top)};
    if (band[k].lo > band[k].hi) band[k] = {band[k].lo, band[k].lo - 1};
  }
  std::int64_t cols = 1;
  for (const Band& b : band) cols = std::max(cols, b.width());
  BitTable take(n, static_cast<std::size_t>(cols));
  const std::int64_t bad = prof ? ExtInt::kNegInf : ExtInt::kPosInf;
  std::vector<std::int64_t> prev{0}, cur;
  for (std::size_t k = 1; k <= n; ++k) {
    const Item& it = perm[k - 1];
    const std::int64_t step = prof ? it.weight : it.profit;
    const std::int64_t gain = prof ? it.profit : it.weight;
    const Band pb = band[k - 1], cb = band[k];
    auto read = [&](std::int64_t j) {
      return (j < pb.lo || j > pb.hi) ? bad : prev[static_cast<std::size_t>(j - pb.lo)];
    };
    cur.assign(static_cast<std::size_t>(std::max<std::int64_t>(cb.width(), 0)), bad);
    for (std::int64_t j = cb.lo; j <= cb.hi; ++j) {
      std::int64_t keep = read(j), from = read(j - step);
      std::int64_t best = keep;
      if (from != bad) {
        std::int64_t cand = from + gain;
        if (prof ? cand > keep : cand < keep) {
          best = cand;
          take.set(k - 1, static_cast<std::size_t>(j - cb.lo));
        }
      }
      cur[static_cast<std::size_t>(j - cb.lo)] = best;
    }
    std::swap(prev, cur);
  }
  const Band last = band[n];
  std::vector<ExtInt> row(prev.begin(), prev.end());
  std::vector<std::int64_t> starts(n);
  for (std::size_t k = 1; k <= n; ++k) starts[k - 1] = band[k].lo;
  NodeId table = tree.add(WitnessTree::Table{perm, std::move(take), std::move(starts)},
                          MonotoneSeq(last.lo, std::move(row), Direction::unknown,
                                      prof ? Sentinel::neg_inf : Sentinel::pos_inf));
  NodeId folded = running_node(tree, table, out);
  if (!prof) return {tree.seq(folded), folded};
  // Every item fits: the whole set is optimal from its weight on.
  auto [wall, pall] = totals(perm);
  std::vector<ExtInt> fixed(static_cast<std::size_t>(out.length()), ExtInt::neg_inf());
  for (std::int64_t j = std::max(out.lo, wall); j <= out.hi; ++j) fixed[static_cast<std::size_t>(j - out.lo)] = pall;
  NodeId all = tree.add(WitnessTree::Fixed{perm},
                        MonotoneSeq(out.lo, std::move(fixed), Direction::non_decreasing, Sentinel::neg_inf));
  NodeId id = best_of(tree, {folded, all});
  return {tree.seq(id), id};
}

}  // namespace

SeqResult band_profit_dp(std::span<const Item> items, std::int64_t center, IntInterval window, const SeedCtx& seed,
                         WitnessTree& tree, BandReport* report) {
  if (tree.sense() != Sense::profit) throw std::invalid_argument("band_profit_dp: tree sense");
  return band_dp(items, center, window, seed, tree, report);
}

SeqResult band_weight_dp(std::span<const Item> items, std::int64_t center, IntInterval window, const SeedCtx& seed,
                         WitnessTree& tree, BandReport* report) {
  if (tree.sense() != Sense::weight) throw std::invalid_argument("band_weight_dp: tree sense");
  return band_dp(items, center, window, seed, tree, report);
}

SeqResult hexu_profit_window(std::span<const Item> items, std::int64_t t, std::int64_t l, const SeedCtx& seed,
                             WitnessTree& tree, BandReport* report) {
  if (l < 0 || l > t) throw std::out_of_range("hexu_profit_window: l must lie in [0, t]");
  return band_profit_dp(items, t, {t - l, t + l}, seed, tree, report);
}

SeqResult hexu_weight_window(std::span<const Item> items, std::int64_t v, std::int64_t l, const SeedCtx& seed,
                             WitnessTree& tree, BandReport* report) {
  if (l < 0 || l > v) throw std::out_of_range("hexu_weight_window: l must lie in [0, v]");
  return band_weight_dp(items, v, {v - l, v + l}, seed, tree, report);
}

}  // namespace tk::base
