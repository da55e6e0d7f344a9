#include "tropknap/harness/generate.hpp"

#include <algorithm>

#include "tropknap/base/greedy.hpp"

namespace tk::harness {

KnapsackInstance gen_random_instance(std::size_t n, std::int64_t w_max, std::int64_t p_max, std::int64_t t,
                                     const SeedCtx& seed) {
  Rng rng(seed);
  std::vector<std::pair<std::int64_t, std::int64_t>> items(n);
  for (auto& [w, p] : items) {
    w = rng.between(1, w_max);
    p = rng.between(1, p_max);
  }
  return KnapsackInstance(std::move(items), t);
}

double balancedness(const KnapsackInstance& inst) {
  if (inst.n() == 0 || inst.capacity() == 0) return 1.0;
  std::int64_t g = base::greedy_upper_bound(inst);
  if (g == 0) return 1.0;
  return (static_cast<double>(inst.capacity()) / static_cast<double>(inst.w_max())) /
         (static_cast<double>(g) / static_cast<double>(inst.p_max()));
}

KnapsackInstance gen_balanced_instance(std::size_t n, std::int64_t w_max, std::int64_t p_max, const SeedCtx& seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed.child(attempt));
    std::vector<std::pair<std::int64_t, std::int64_t>> items(n);
    std::int64_t sum = 0;
    for (auto& [w, p] : items) {
      w = rng.between(1, w_max);
      // ratio = p_max / w_max * f with f in [1/4, 1], sampled on a 1/1024 grid
      std::int64_t f = rng.between(256, 1024);
      __int128 num = static_cast<__int128>(w) * p_max * f;
      __int128 den = static_cast<__int128>(w_max) * 1024;
      p = std::clamp<std::int64_t>(static_cast<std::int64_t>((num + den / 2) / den), 1, p_max);
      sum += w;
    }
    KnapsackInstance inst(std::move(items), (sum + 1) / 2);
    double b = balancedness(inst);
    if ((b >= 0.125 && b <= 8.0) || attempt >= 64) return inst;
  }
}

MonotoneSeq random_monotone(std::size_t n, std::int64_t M, Direction dir, Sentinel sentinel, const SeedCtx& seed,
                            int inf_percent) {
  Rng rng(seed);
  std::vector<std::int64_t> raw(n);
  for (auto& x : raw) x = rng.between(0, M);
  std::sort(raw.begin(), raw.end());
  if (dir == Direction::non_increasing) std::reverse(raw.begin(), raw.end());
  std::vector<ExtInt> v(raw.begin(), raw.end());
  ExtInt inf = sentinel == Sentinel::pos_inf ? ExtInt::pos_inf() : ExtInt::neg_inf();
  for (auto& x : v)
    if (inf_percent > 0 && static_cast<int>(rng.below(100)) < inf_percent) x = inf;
  return MonotoneSeq(0, std::move(v), dir, sentinel);
}

MonotoneSeq random_arbitrary(std::size_t n, std::int64_t M, const SeedCtx& seed) {
  Rng rng(seed);
  std::vector<ExtInt> v(n);
  for (auto& x : v) x = rng.between(0, M);
  return MonotoneSeq(0, std::move(v), Direction::unknown, Sentinel::neg_inf);
}

hardness::MPVInstance random_mpv(std::int64_t n, const SeedCtx& seed) {
  Rng rng(seed);
  hardness::MPVInstance m;
  auto un = static_cast<std::size_t>(n);
  m.a.resize(un);
  m.b.resize(un);
  for (auto& x : m.a) x = rng.between(0, n);
  for (auto& x : m.b) x = rng.between(0, n);
  // exact min-plus, clipped to n, then lowered at random: still a lower bound
  m.c.assign(2 * un - 1, n);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) m.c[i + j] = std::min(m.c[i + j], m.a[i] + m.b[j]);
  for (auto& x : m.c)
    if (rng.below(4) == 0) x = rng.between(0, x);
  if (rng.below(2) == 0) {
    // break it at one index where the bound is below n
    std::vector<std::size_t> room;
    for (std::size_t k = 0; k < m.c.size(); ++k) {
      std::int64_t best = n + 1;
      for (std::size_t i = 0; i < un; ++i)
        if (k >= i && k - i < un) best = std::min(best, m.a[i] + m.b[k - i]);
      if (best < n) room.push_back(k);
    }
    if (!room.empty()) {
      std::size_t k = room[rng.below(room.size())];
      std::int64_t best = n;
      for (std::size_t i = 0; i < un; ++i)
        if (k >= i && k - i < un) best = std::min(best, m.a[i] + m.b[k - i]);
      m.c[k] = rng.between(best + 1, n);
    }
  }
  return m;
}

}  // namespace tk::harness
