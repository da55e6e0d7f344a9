#include "tropknap/conv/monotone.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "tropknap/conv/ntt.hpp"
#include "tropknap/conv/residue.hpp"

namespace tk::conv {

ConvOptions& default_conv_options() {
  static ConvOptions opts;
  return opts;
}

namespace {

std::vector<std::int64_t> raw_minplus_input(const MonotoneSeq& s, std::int64_t M) {
  std::vector<std::int64_t> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    ExtInt e = s.values()[i];
    if (e.is_neg_inf()) throw std::invalid_argument("monotone_minplus_rect: -inf entry");
    if (e.finite() && (e.raw() < 0 || e.raw() > M))
      throw std::out_of_range("monotone_minplus_rect: entry outside [0, M]");
    v[i] = e.raw();
  }
  return v;
}

std::vector<std::int64_t> naive_raw(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> c(a.size() + b.size() - 1, kInf);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == kInf) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == kInf) continue;
      std::int64_t v = a[i] + b[j];
      if (v < c[i + j]) c[i + j] = v;
    }
  }
  return c;
}

std::vector<std::int64_t> counting_raw(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                       std::int64_t M) {
  const std::size_t stride = static_cast<std::size_t>(2 * M + 1);
  auto pack = [&](const std::vector<std::int64_t>& v) {
    std::vector<std::uint32_t> f(stride * v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != kInf) f[static_cast<std::size_t>(v[i]) + stride * i] = 1;
    return f;
  };
  auto prod = convolve_exact(pack(a), pack(b), std::min(a.size(), b.size()) + 1);
  std::vector<std::int64_t> c(a.size() + b.size() - 1, kInf);
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (std::size_t v = 0; v < stride; ++v) {
      std::size_t idx = v + stride * k;
      if (idx < prod.size() && prod[idx]) {
        c[k] = static_cast<std::int64_t>(v);
        break;
      }
    }
  }
  return c;
}

bool use_engine(std::size_t na, std::size_t nb, std::int64_t M, const ConvOptions& o) {
  using Mode = ConvOptions::Mode;
  if (o.mode == Mode::engine) return true;
  if (o.mode != Mode::automatic) return false;
  long double root = std::sqrt(static_cast<long double>(M));
  long double nm = static_cast<long double>(std::max(na, nb)) * static_cast<long double>(M);
  return root >= static_cast<long double>(o.min_sqrt_m) && nm >= static_cast<long double>(o.min_nm);
}

bool counting_cheaper(std::size_t na, std::size_t nb, std::int64_t M) {
  long double naive = static_cast<long double>(na) * static_cast<long double>(nb);
  long double n = static_cast<long double>(next_pow2(static_cast<std::size_t>(2 * M + 1) * (na + nb)));
  return 3.0L * n * std::log2(n) < naive;
}

}  // namespace

MonotoneSeq minplus_counting(const MonotoneSeq& a, const MonotoneSeq& b, std::int64_t M) {
  if (a.empty() || b.empty()) return MonotoneSeq(0, {}, Direction::unknown, Sentinel::pos_inf);
  auto c = counting_raw(raw_minplus_input(a, M), raw_minplus_input(b, M), M);
  Direction d = a.direction() == b.direction() ? a.direction() : Direction::unknown;
  return MonotoneSeq(a.start() + b.start(), std::vector<ExtInt>(c.begin(), c.end()), d, Sentinel::pos_inf);
}

MonotoneSeq monotone_minplus_rect(const MonotoneSeq& a, const MonotoneSeq& b, std::int64_t M,
                                  const SeedCtx& seed, const ConvOptions& opts) {
  if (M < 0) throw std::invalid_argument("monotone_minplus_rect: negative M");
  Direction d = a.direction();
  if (d == Direction::unknown || b.direction() != d)
    throw std::invalid_argument("monotone_minplus_rect: inputs must share a monotone direction");
  if (a.empty() || b.empty()) return MonotoneSeq(0, {}, d, Sentinel::pos_inf);
  if (!a.finite_entries_monotone() || !b.finite_entries_monotone())
    throw std::invalid_argument("monotone_minplus_rect: input violates its direction tag");
  auto av = raw_minplus_input(a, M), bv = raw_minplus_input(b, M);
  bool flip = d == Direction::non_increasing;
  if (flip) {
    std::reverse(av.begin(), av.end());
    std::reverse(bv.begin(), bv.end());
  }
  std::vector<std::int64_t> c;
  using Mode = ConvOptions::Mode;
  if (use_engine(av.size(), bv.size(), M, opts)) {
    c = minplus_engine(av, bv, M, seed, opts.stats, opts.trace, opts.budget);
  } else if (opts.mode == Mode::counting ||
             (opts.mode == Mode::automatic && counting_cheaper(av.size(), bv.size(), M))) {
    c = counting_raw(av, bv, M);
  } else {
    c = naive_raw(av, bv);
  }
  if (flip) std::reverse(c.begin(), c.end());
  return MonotoneSeq(a.start() + b.start(), std::vector<ExtInt>(c.begin(), c.end()), d, Sentinel::pos_inf);
}

MonotoneSeq monotone_maxplus_rect(const MonotoneSeq& a, const MonotoneSeq& b, std::int64_t M,
                                  const SeedCtx& seed, const ConvOptions& opts) {
  for (const MonotoneSeq* s : {&a, &b})
    for (ExtInt e : s->values())
      if (e.is_pos_inf()) throw std::invalid_argument("monotone_maxplus_rect: +inf entry");
  MonotoneSeq c = monotone_minplus_rect(negate_shift(a, M), negate_shift(b, M), M, seed, opts);
  std::vector<ExtInt> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    ExtInt v = c.values()[i];
    out[i] = v.finite() ? ExtInt(2 * M - v.raw()) : ExtInt::neg_inf();
  }
  Direction d = a.direction();
  return MonotoneSeq(c.start(), std::move(out), d, Sentinel::neg_inf);
}

namespace {

using Raw = std::vector<std::int64_t>;

struct OneMonotone {
  std::int64_t M;
  SeedCtx seed;
  const ConvOptions& opts;
  std::uint64_t calls = 0;

  static void fold(Raw& c, const Raw& part, std::size_t offset) {
    for (std::size_t k = 0; k < part.size(); ++k) c[k + offset] = std::max(c[k + offset], part[k]);
  }

  Raw monotone(const Raw& a, const Raw& b) {
    auto seq = [](const Raw& v) {
      return MonotoneSeq(0, std::vector<ExtInt>(v.begin(), v.end()), Direction::non_decreasing,
                         Sentinel::neg_inf);
    };
    MonotoneSeq c = monotone_maxplus_rect(seq(a), seq(b), M, seed.child(calls++), opts);
    Raw out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c.values()[i].raw();
    return out;
  }

  static Raw prefix_max(Raw v) {
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = std::max(v[i], v[i - 1]);
    return v;
  }

  Raw run(const Raw& a, const Raw& b) {
    const std::size_t na = a.size(), nb = b.size();
    Raw c(na + nb - 1, ExtInt::kNegInf);
    if (na == 1 || nb == 1) {
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) c[i + j] = std::max(c[i + j], a[i] + b[j]);
      return c;
    }
    if (na != nb) {
      // Cut the longer side at the shorter length; prefixes of a monotone A stay monotone.
      std::size_t m = std::min(na, nb);
      if (na > nb) {
        fold(c, run(Raw(a.begin(), a.begin() + m), b), 0);
        fold(c, run(Raw(a.begin() + m, a.end()), b), m);
      } else {
        fold(c, run(a, Raw(b.begin(), b.begin() + m)), 0);
        fold(c, run(a, Raw(b.begin() + m, b.end())), m);
      }
      return c;
    }
    const std::size_t n = na;
    if (n % 2 == 1) {
      fold(c, run(Raw(a.begin(), a.end() - 1), Raw(b.begin(), b.end() - 1)), 0);
      for (std::size_t j = 0; j < n; ++j) c[n - 1 + j] = std::max(c[n - 1 + j], a[n - 1] + b[j]);
      for (std::size_t i = 0; i < n; ++i) c[i + n - 1] = std::max(c[i + n - 1], a[i] + b[n - 1]);
      return c;
    }
    const std::size_t h = n / 2;
    Raw a1(a.begin(), a.begin() + h), a2(a.begin() + h, a.end());
    Raw b1(b.begin(), b.begin() + h), b2(b.begin() + h, b.end());
    fold(c, monotone(a1, prefix_max(b1)), 0);
    fold(c, monotone(a1, prefix_max(b2)), h);
    fold(c, run(a2, b1), h);
    fold(c, run(a2, b2), n);
    return c;
  }
};

}  // namespace

MonotoneSeq one_monotone_maxplus(const MonotoneSeq& a, const MonotoneSeq& b, std::int64_t M,
                                 const SeedCtx& seed, const ConvOptions& opts) {
  for (const MonotoneSeq* s : {&a, &b})
    for (ExtInt e : s->values())
      if (!e.finite() || e.raw() < 0 || e.raw() > M)
        throw std::out_of_range("one_monotone_maxplus: entries must be finite and in [0, M]");
  if (!a.with_direction(Direction::non_decreasing).finite_entries_monotone())
    throw std::invalid_argument("one_monotone_maxplus: A is not non-decreasing");
  if (a.empty() || b.empty()) return MonotoneSeq(0, {}, Direction::unknown, Sentinel::neg_inf);
  Raw av(a.size()), bv(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) av[i] = a.values()[i].raw();
  for (std::size_t i = 0; i < b.size(); ++i) bv[i] = b.values()[i].raw();
  OneMonotone om{M, seed, opts};
  Raw c = om.run(av, bv);
  return MonotoneSeq(a.start() + b.start(), std::vector<ExtInt>(c.begin(), c.end()), Direction::unknown,
                     Sentinel::neg_inf);
}

}  // namespace tk::conv
