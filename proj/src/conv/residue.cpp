#include "tropknap/conv/residue.hpp"

#include <cmath>
#include <stdexcept>

namespace tk::conv {

std::int64_t third_ceil(std::int64_t x, std::int64_t p) { return (x * p + 2) / 3; }

int residue_class(std::int64_t value, std::int64_t p) {
  std::int64_t r = value % p;
  return static_cast<int>(3 * r / p);
}

std::vector<std::int64_t> residue_part(const std::vector<std::int64_t>& a, std::int64_t p, int x) {
  std::vector<std::int64_t> out(a.size(), kInf);
  std::int64_t shift = third_ceil(x, p);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != kInf && residue_class(a[i], p) == x) out[i] = a[i] - shift;
  return out;
}

std::size_t infinity_runs(const std::vector<std::int64_t>& a) {
  std::size_t runs = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == kInf && (i == 0 || a[i - 1] != kInf)) ++runs;
  return runs;
}

namespace {

std::vector<std::int64_t> raw_values(const MonotoneSeq& s) {
  std::vector<std::int64_t> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    ExtInt e = s.values()[i];
    if (e.is_neg_inf() || (e.finite() && e.raw() < 0))
      throw std::invalid_argument("residue_split: entries must be non-negative or +inf");
    v[i] = e.raw();
  }
  return v;
}

MonotoneSeq to_seq(const MonotoneSeq& like, const std::vector<std::int64_t>& v) {
  std::vector<ExtInt> e(v.begin(), v.end());
  return MonotoneSeq(like.start(), std::move(e), like.direction(), Sentinel::pos_inf);
}

}  // namespace

std::vector<ResidueClassPair> residue_split(const MonotoneSeq& a, const MonotoneSeq& b, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("residue_split: p must be at least 2");
  auto av = raw_values(a), bv = raw_values(b);
  std::vector<ResidueClassPair> out;
  for (int x = 0; x < 3; ++x) {
    auto ax = residue_part(av, p, x);
    for (int y = 0; y < 3; ++y) {
      ResidueClassPair pr;
      pr.x = x;
      pr.y = y;
      pr.a_shifted = to_seq(a, ax);
      pr.b_shifted = to_seq(b, residue_part(bv, p, y));
      pr.shift_back = third_ceil(x, p) + third_ceil(y, p);
      out.push_back(std::move(pr));
    }
  }
  return out;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::int64_t isqrt(std::int64_t v) {
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t sample_prime(std::int64_t M, Rng& rng) {
  if (M < 0) throw std::invalid_argument("sample_prime: negative M");
  std::int64_t s = isqrt(M);
  std::int64_t lo = s * s == M ? s : s + 1;
  std::int64_t hi = isqrt(4 * M);
  if (lo < 2) lo = 2;
  if (hi < lo) hi = lo;
  std::int64_t range = hi - lo + 1;
  for (std::int64_t attempt = 0; attempt < 64 * range + 64; ++attempt) {
    std::int64_t c = rng.between(lo, hi);
    if (is_prime(static_cast<std::uint64_t>(c))) return c;
  }
  for (std::int64_t c = lo;; ++c)
    if (is_prime(static_cast<std::uint64_t>(c))) return c;
}

}  // namespace tk::conv
