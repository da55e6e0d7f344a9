#include "tropknap/conv/engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>

#include "tropknap/conv/ntt.hpp"
#include "tropknap/conv/residue.hpp"
#include "tropknap/conv/tilde.hpp"

namespace tk::conv {

namespace {

constexpr int kOffset = 10;
constexpr int kOffsets = 2 * kOffset + 1;

std::mutex g_engine_ntt_mutex;

// Level-l counting polynomial sum_i y^{r_i >> l} z^i of a residue vector,
// packed as slot (r_i >> l) + ye * i. The y-range ye is fixed by the residue
// bound rather than by the data, so the transform of one A class serves all
// three B classes. A product coefficient at (e, k) counts the pairs
// i + j = k with (ra_i >> l) + (rb_j >> l) = e.
struct LevelShape {
  std::int64_t ye = 1;
  std::size_t len = 0, n = 0;
};

std::vector<LevelShape> level_shapes(std::int64_t rmax, int h, std::size_t out_len) {
  std::vector<LevelShape> out(static_cast<std::size_t>(h));
  for (int l = 0; l < h; ++l) {
    LevelShape& s = out[static_cast<std::size_t>(l)];
    s.ye = 2 * (rmax >> l) + 1;
    s.len = static_cast<std::size_t>(s.ye) * out_len;
    s.n = next_pow2(s.len);
  }
  return out;
}

std::vector<std::uint32_t> level_transform(const std::vector<std::int64_t>& r, const LevelShape& s, int level,
                                           WorkBudget* budget) {
  if (budget) budget->charge(2 * s.n * static_cast<std::uint64_t>(std::bit_width(s.n)));
  std::vector<std::uint32_t> f(s.n, 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] >= 0) f[static_cast<std::size_t>(r[i] >> level) + static_cast<std::size_t>(s.ye) * i] += 1;
  std::lock_guard<std::mutex> lock(g_engine_ntt_mutex);
  ntt_prime(0).forward(f.data(), s.n);
  return f;
}

// Multiplies two transforms and returns the first s.len product coefficients.
std::vector<std::uint32_t> level_product(const std::vector<std::uint32_t>& fa, const std::vector<std::uint32_t>& fb,
                                         const LevelShape& s, WorkBudget* budget) {
  if (budget) budget->charge(s.n * static_cast<std::uint64_t>(std::bit_width(s.n)));
  std::vector<std::uint32_t> out(s.n);
  std::lock_guard<std::mutex> lock(g_engine_ntt_mutex);
  Ntt& ntt = ntt_prime(0);
  ntt.pointwise(out.data(), fa.data(), fb.data(), s.n, false);
  ntt.inverse(out.data(), s.n);
  out.resize(s.len);
  out.shrink_to_fit();
  return out;
}

// next[l * n + i]: first j > i at which r[j] >> l differs from r[i] >> l or
// r[j] is missing. Inside a segment this is where the level-l bit flips.
std::vector<std::int32_t> change_table(const std::vector<std::int64_t>& r, int h) {
  const std::size_t n = r.size();
  std::vector<std::int32_t> next(static_cast<std::size_t>(h) * n);
  for (int l = 0; l < h; ++l) {
    std::int32_t* row = next.data() + static_cast<std::size_t>(l) * n;
    for (std::size_t i = n; i-- > 0;) {
      bool same = i + 1 < n && r[i] >= 0 && r[i + 1] >= 0 && (r[i + 1] >> l) == (r[i] >> l);
      row[i] = same ? row[i + 1] : static_cast<std::int32_t>(i + 1);
    }
  }
  return next;
}

std::vector<std::int64_t> residues(const std::vector<std::int64_t>& a, std::int64_t p) {
  std::vector<std::int64_t> r(a.size(), -1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != kInf) r[i] = a[i] % p;
  return r;
}

struct Seg {
  std::int64_t i1, i2;
  int b;
};

struct Piece {
  std::int64_t s, f, e;
};

// One residue class of an input: residues, change table and per-level transforms.
struct ClassData {
  std::vector<std::int64_t> r;
  std::vector<std::int32_t> next;
  std::vector<std::vector<std::uint32_t>> f;
};

struct PairInput {
  const std::vector<std::int64_t>* a;
  const std::vector<std::int64_t>* b;
  const ClassData* ca;
  const ClassData* cb;
  std::int64_t p;
  int pair_id;
};

std::vector<std::int64_t> solve_pair(const PairInput& in, const std::vector<LevelShape>& shapes,
                                     EngineStats* stats, const EngineTrace* trace, WorkBudget* budget) {
  const auto& a = *in.a;
  const auto& b = *in.b;
  const auto& ra = in.ca->r;
  const auto& rb = in.cb->r;
  const std::int64_t p = in.p;
  const std::int64_t na = static_cast<std::int64_t>(a.size());
  const std::int64_t nb = static_cast<std::int64_t>(b.size());
  const auto& next_a = in.ca->next;
  const auto& next_b = in.cb->next;
  std::vector<std::int64_t> ta(a.size(), kInf), tb(b.size(), kInf);
  for (std::int64_t i = 0; i < na; ++i)
    if (a[i] != kInf) ta[i] = a[i] / p;
  for (std::int64_t j = 0; j < nb; ++j)
    if (b[j] != kInf) tb[j] = b[j] / p;

  const auto runs_a = constant_runs(ta);
  const auto runs_b = constant_runs(tb);
  const auto ct = tilde_convolution(runs_a, a.size(), runs_b, b.size());
  if (budget) budget->charge(runs_a.size() * runs_b.size() * 8 + ct.size());

  const int h = static_cast<int>(shapes.size());
  std::vector<std::vector<std::uint32_t>> prods(static_cast<std::size_t>(h));
  for (int l = h - 1; l >= 0; --l) {
    const LevelShape& sh = shapes[static_cast<std::size_t>(l)];
    prods[static_cast<std::size_t>(l)] =
        level_product(in.ca->f[static_cast<std::size_t>(l)], in.cb->f[static_cast<std::size_t>(l)], sh, budget);
    if (stats) stats->product_slots += sh.len;
  }
  if (stats && stats->segments_per_level.size() < static_cast<std::size_t>(h + 1))
    stats->segments_per_level.resize(static_cast<std::size_t>(h + 1), 0);

  std::vector<std::int64_t> out(ct.size(), kInf);
  std::vector<Seg> segs;
  std::vector<Piece> pieces;
  std::vector<SegmentView> views;
  auto report = [&](int level, std::int64_t k, std::int64_t c) {
    if (!trace || !trace->on_level) return;
    views.clear();
    for (const Seg& sg : segs) views.push_back({sg.i1, sg.i2, sg.b});
    LevelEvent ev;
    ev.pair = in.pair_id;
    ev.p = p;
    ev.level = level;
    ev.top_level = h;
    ev.k = k;
    ev.c_level = c;
    ev.segments = &views;
    ev.a_shifted = &a;
    ev.b_shifted = &b;
    trace->on_level(ev);
  };

  // Candidates at level l are scanned for e in [2 cur - kLow, 2 cur + 2]. The
  // upper end is reached by any surviving pair of level l + 1; below 2 cur - 8
  // nothing can lie, since C^(l) and C^(l+1) both track C mod p. Inside this
  // range every pair with d = e >> 1 in the tracked offsets [-10, 10] is
  // accounted for, which is what makes the single-variable count exact.
  constexpr std::int64_t kLow = 2 * kOffset - 1;
  constexpr std::size_t kScan = kLow + 3;

  for (std::int64_t k = 0; k < static_cast<std::int64_t>(ct.size()); ++k) {
    if (ct[k] == kInf) continue;
    const std::int64_t ilo = std::max<std::int64_t>(0, k - (nb - 1));
    const std::int64_t ihi = std::min<std::int64_t>(k, na - 1);

    // False-positive segments with respect to the top level: intersections of
    // a run of the quotient of A with a (reflected) run of the quotient of B
    // whose sum exceeds the quotient product at k.
    segs.clear();
    auto ia = std::lower_bound(runs_a.begin(), runs_a.end(), ilo,
                               [](const Run& r, std::int64_t v) { return r.hi < v; });
    auto ib_up = std::upper_bound(runs_b.begin(), runs_b.end(), k - ilo,
                                  [](std::int64_t v, const Run& r) { return v < r.lo; });
    std::ptrdiff_t ib = (ib_up - runs_b.begin()) - 1;
    while (ia != runs_a.end() && ib >= 0) {
      const Run& x = *ia;
      const Run& y = runs_b[static_cast<std::size_t>(ib)];
      if (x.lo > ihi || k - y.hi > ihi) break;
      std::int64_t ah = std::min(x.hi, ihi);
      std::int64_t bh = std::min(k - y.lo, ihi);
      std::int64_t s0 = std::max({x.lo, k - y.hi, ilo});
      std::int64_t f0 = std::min(ah, bh);
      if (s0 <= f0 && x.value + y.value != ct[k]) segs.push_back({s0, f0, 0});
      if (ah <= bh) ++ia;
      if (bh <= ah) --ib;
    }
    if (stats) stats->segments_per_level[static_cast<std::size_t>(h)] += segs.size();
    report(h, k, 0);

    std::int64_t cur = 0;
    for (int l = h - 1; l >= 0; --l) {
      const auto& prod = prods[static_cast<std::size_t>(l)];
      const std::int64_t ye = shapes[static_cast<std::size_t>(l)].ye;
      const std::int64_t lo = 2 * cur - kLow;
      const std::size_t row_a = static_cast<std::size_t>(l) * static_cast<std::size_t>(na);
      const std::size_t row_b = static_cast<std::size_t>(l) * static_cast<std::size_t>(nb);
      std::array<std::int64_t, kScan> fp{};
      pieces.clear();
      for (const Seg& sg : segs) {
        // On the segment ra >> (l+1) and rb >> (l+1) are constant, so each of
        // ra >> l and rb[k - i] >> l changes at most once: three pieces.
        const std::int64_t ja = sg.i1, jb = k - sg.i2;
        std::int64_t sa = (ra[ja] >> l) & 1 ? ja : std::min<std::int64_t>(next_a[row_a + static_cast<std::size_t>(ja)], sg.i2 + 1);
        std::int64_t fb = (rb[jb] >> l) & 1 ? jb : std::min<std::int64_t>(next_b[row_b + static_cast<std::size_t>(jb)], k - sg.i1 + 1);
        std::int64_t sb = k - fb + 1;
        std::int64_t cut1 = std::min(sa, sb), cut2 = std::max(sa, sb);
        const std::int64_t bounds[4] = {sg.i1, cut1, cut2, sg.i2 + 1};
        for (int q = 0; q < 3; ++q) {
          std::int64_t s0 = bounds[q], f0 = bounds[q + 1] - 1;
          if (s0 > f0) continue;
          std::int64_t e = (ra[s0] >> l) + (rb[k - s0] >> l);
          if (e >= lo && e - lo < static_cast<std::int64_t>(kScan))
            fp[static_cast<std::size_t>(e - lo)] += f0 - s0 + 1;
          pieces.push_back({s0, f0, e});
        }
      }
      if (budget) budget->charge(16 * segs.size() + 64);

      std::int64_t best = kInf;
      const std::size_t base = static_cast<std::size_t>(k) * static_cast<std::size_t>(ye);
      for (std::int64_t e = std::max<std::int64_t>(lo, 0); e < lo + static_cast<std::int64_t>(kScan) && e < ye; ++e) {
        std::int64_t cnt = prod[base + static_cast<std::size_t>(e)];
        std::int64_t f = fp[static_cast<std::size_t>(e - lo)];
        if (cnt < f) throw std::logic_error("minplus_engine: false positives exceed product count");
        if (cnt > f) {
          best = e;
          break;
        }
      }
      if (best == kInf) throw std::logic_error("minplus_engine: no candidate at a finite index");

      segs.clear();
      for (const Piece& pc : pieces) {
        std::int64_t off = pc.e - best;
        if (off >= -kOffset && off <= kOffset) segs.push_back({pc.s, pc.f, static_cast<int>(off)});
      }
      cur = best;
      if (stats) stats->segments_per_level[static_cast<std::size_t>(l)] += segs.size();
      report(l, k, cur);
    }
    out[static_cast<std::size_t>(k)] = p * ct[k] + cur;
  }
  return out;
}

void validate(const std::vector<std::int64_t>& a, const char* name) {
  std::int64_t prev = -1;
  for (auto v : a) {
    if (v == kInf) continue;
    if (v < 0) throw std::invalid_argument(std::string("minplus_engine: negative entry in ") + name);
    if (v < prev) throw std::invalid_argument(std::string("minplus_engine: ") + name + " is not monotone");
    prev = v;
  }
}

}  // namespace

std::vector<std::int64_t> minplus_engine_with_prime(const std::vector<std::int64_t>& a,
                                                    const std::vector<std::int64_t>& b, std::int64_t p,
                                                    EngineStats* stats, const EngineTrace* trace,
                                                    WorkBudget* budget) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("minplus_engine: p must be prime");
  validate(a, "A");
  validate(b, "B");
  if (a.empty() || b.empty()) return {};
  if (stats) {
    stats->prime = p;
    stats->top_level = std::bit_width(static_cast<std::uint64_t>(p));
  }
  std::vector<std::int64_t> out(a.size() + b.size() - 1, kInf);
  const int h = std::bit_width(static_cast<std::uint64_t>(p));
  const auto shapes = level_shapes((p - 1) / 3, h, out.size());
  auto all_inf = [](const std::vector<std::int64_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e == kInf; });
  };
  auto prepare = [&](const std::vector<std::int64_t>& part) {
    ClassData d;
    d.r = residues(part, p);
    d.next = change_table(d.r, h);
    d.f.resize(static_cast<std::size_t>(h));
    for (int l = 0; l < h; ++l) d.f[static_cast<std::size_t>(l)] = level_transform(d.r, shapes[static_cast<std::size_t>(l)], l, budget);
    return d;
  };
  // B's classes are transformed once and reused by all three classes of A.
  std::vector<std::vector<std::int64_t>> parts_b(3);
  std::vector<ClassData> class_b(3);
  for (int y = 0; y < 3; ++y) {
    parts_b[static_cast<std::size_t>(y)] = residue_part(b, p, y);
    if (!all_inf(parts_b[static_cast<std::size_t>(y)])) class_b[static_cast<std::size_t>(y)] = prepare(parts_b[static_cast<std::size_t>(y)]);
  }
  for (int x = 0; x < 3; ++x) {
    auto ax = residue_part(a, p, x);
    if (all_inf(ax)) continue;
    const ClassData ca = prepare(ax);
    for (int y = 0; y < 3; ++y) {
      const auto& by = parts_b[static_cast<std::size_t>(y)];
      if (all_inf(by)) continue;
      if (stats) {
        stats->pairs_run++;
        stats->max_infinity_runs = std::max({stats->max_infinity_runs, infinity_runs(ax), infinity_runs(by)});
      }
      PairInput in{&ax, &by, &ca, &class_b[static_cast<std::size_t>(y)], p, 3 * x + y};
      auto c = solve_pair(in, shapes, stats, trace, budget);
      std::int64_t shift = third_ceil(x, p) + third_ceil(y, p);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != kInf) out[k] = std::min(out[k], c[k] + shift);
    }
  }
  return out;
}

std::vector<std::int64_t> minplus_engine(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b, std::int64_t M,
                                         const SeedCtx& seed, EngineStats* stats,
                                         const EngineTrace* trace, WorkBudget* budget) {
  Rng rng(seed.child(0x9c1));
  std::int64_t p = sample_prime(M, rng);
  return minplus_engine_with_prime(a, b, p, stats, trace, budget);
}

}  // namespace tk::conv
