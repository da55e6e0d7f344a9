#include "tropknap/conv/ntt.hpp"

#include <immintrin.h>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace tk::conv {

std::size_t next_pow2(std::size_t n) {
  std::size_t r = 1;
  while (r < n) r <<= 1;
  return r;
}

Ntt::Ntt(std::uint32_t mod, std::uint32_t generator) : mod_(mod), gen_(generator) {
  std::uint32_t inv = mod;  // Newton iteration for p^{-1} mod 2^32
  for (int i = 0; i < 5; ++i) inv *= 2 - mod * inv;
  ninv_ = static_cast<std::uint32_t>(0) - inv;
  max_log_ = 0;
  while (((mod - 1) >> max_log_ & 1) == 0) ++max_log_;
}

std::uint64_t Ntt::pow(std::uint64_t b, std::uint64_t e) const {
  std::uint64_t r = 1;
  b %= mod_;
  while (e) {
    if (e & 1) r = r * b % mod_;
    b = b * b % mod_;
    e >>= 1;
  }
  return r;
}

std::uint32_t Ntt::mul(std::uint32_t x, std::uint32_t y) const {
  std::uint64_t t = static_cast<std::uint64_t>(x) * y;
  std::uint32_t m = static_cast<std::uint32_t>(t) * ninv_;
  std::uint64_t r = (t + static_cast<std::uint64_t>(m) * mod_) >> 32;
  return r >= mod_ ? static_cast<std::uint32_t>(r - mod_) : static_cast<std::uint32_t>(r);
}

void Ntt::prepare(std::size_t n) {
  if (n <= table_n_) return;
  int lg = 0;
  while ((std::size_t{1} << lg) < n) ++lg;
  if (lg > max_log_) throw std::length_error("Ntt: transform too long for this prime");
  // Roots for butterflies of half-length h live at [h, 2h), so each pass reads
  // its twiddles contiguously and the table never depends on n.
  std::size_t from = std::max<std::size_t>(table_n_, 1);
  fwd_.resize(n);
  inv_.resize(n);
  const std::uint64_t r_mod = (std::uint64_t{1} << 32) % mod_;
  for (std::size_t h = from; h < n; h <<= 1) {
    std::uint64_t w = pow(gen_, (mod_ - 1) / (2 * h));
    std::uint64_t wi = pow(w, mod_ - 2);
    std::uint64_t a = 1, b = 1;
    for (std::size_t j = 0; j < h; ++j) {
      fwd_[h + j] = static_cast<std::uint32_t>(a * r_mod % mod_);
      inv_[h + j] = static_cast<std::uint32_t>(b * r_mod % mod_);
      a = a * w % mod_;
      b = b * wi % mod_;
    }
  }
  table_n_ = n;
}

namespace {

bool have_avx2() {
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
}

// Eight-lane Montgomery arithmetic. Inputs of mul may be < 2p (first) and < p
// (second); outputs are reduced below p.
struct Lanes {
  __m256i p, ninv;

  __attribute__((target("avx2"))) static __m256i reduce(__m256i x, __m256i p) {
    return _mm256_min_epu32(x, _mm256_sub_epi32(x, p));
  }

  __attribute__((target("avx2"))) __m256i mul(__m256i a, __m256i b) const {
    __m256i te = _mm256_mul_epu32(a, b);
    __m256i to = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
    __m256i re = _mm256_add_epi64(te, _mm256_mul_epu32(_mm256_mul_epu32(te, ninv), p));
    __m256i ro = _mm256_add_epi64(to, _mm256_mul_epu32(_mm256_mul_epu32(to, ninv), p));
    __m256i r = _mm256_blend_epi32(_mm256_srli_epi64(re, 32), ro, 0xAA);
    return reduce(r, p);
  }
};

__attribute__((target("avx2"))) Lanes make_lanes(std::uint32_t p, std::uint32_t ninv) {
  return {_mm256_set1_epi32(static_cast<int>(p)), _mm256_set1_epi32(static_cast<int>(ninv))};
}

__attribute__((target("avx2"))) void forward_pass_avx2(std::uint32_t* a, std::size_t n, std::size_t half,
                                                       const std::uint32_t* w, std::uint32_t p,
                                                       std::uint32_t ninv) {
  const Lanes L = make_lanes(p, ninv);
  for (std::size_t s = 0; s < n; s += 2 * half) {
    std::uint32_t* x = a + s;
    std::uint32_t* y = x + half;
    for (std::size_t j = 0; j < half; j += 8) {
      __m256i u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + j));
      __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + j));
      __m256i ww = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + j));
      __m256i sum = Lanes::reduce(_mm256_add_epi32(u, v), L.p);
      __m256i diff = _mm256_sub_epi32(_mm256_add_epi32(u, L.p), v);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + j), sum);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + j), L.mul(diff, ww));
    }
  }
}

__attribute__((target("avx2"))) void inverse_pass_avx2(std::uint32_t* a, std::size_t n, std::size_t half,
                                                       const std::uint32_t* w, std::uint32_t p,
                                                       std::uint32_t ninv) {
  const Lanes L = make_lanes(p, ninv);
  for (std::size_t s = 0; s < n; s += 2 * half) {
    std::uint32_t* x = a + s;
    std::uint32_t* y = x + half;
    for (std::size_t j = 0; j < half; j += 8) {
      __m256i u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + j));
      __m256i v = L.mul(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + j)),
                        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + j)));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + j), Lanes::reduce(_mm256_add_epi32(u, v), L.p));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + j),
                          Lanes::reduce(_mm256_sub_epi32(_mm256_add_epi32(u, L.p), v), L.p));
    }
  }
}

__attribute__((target("avx2"))) void pointwise_avx2(std::uint32_t* out, const std::uint32_t* x,
                                                    const std::uint32_t* y, std::size_t n, bool accumulate,
                                                    std::uint32_t p, std::uint32_t ninv) {
  const Lanes L = make_lanes(p, ninv);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i r = L.mul(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i)),
                      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i)));
    if (accumulate)
      r = Lanes::reduce(_mm256_add_epi32(r, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i))), L.p);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
}

// The three innermost passes (half = 4, 2, 1) on blocks of 16, with the
// butterfly partners gathered into whole vectors by shuffles.
struct Tail {
  __m256i w4, w2, w1;
};

__attribute__((target("avx2"))) Tail tail_twiddles(const std::uint32_t* table) {
  const auto* t = reinterpret_cast<const int*>(table);
  return {_mm256_setr_epi32(t[4], t[5], t[6], t[7], t[4], t[5], t[6], t[7]),
          _mm256_setr_epi32(t[2], t[3], t[2], t[3], t[2], t[3], t[2], t[3]), _mm256_set1_epi32(t[1])};
}

__attribute__((target("avx2"))) inline void split(int half, __m256i a, __m256i b, __m256i& u, __m256i& v) {
  if (half == 4) {
    u = _mm256_permute2x128_si256(a, b, 0x20);
    v = _mm256_permute2x128_si256(a, b, 0x31);
  } else if (half == 2) {
    u = _mm256_unpacklo_epi64(a, b);
    v = _mm256_unpackhi_epi64(a, b);
  } else {
    __m256 fa = _mm256_castsi256_ps(a), fb = _mm256_castsi256_ps(b);
    u = _mm256_castps_si256(_mm256_shuffle_ps(fa, fb, _MM_SHUFFLE(2, 0, 2, 0)));
    v = _mm256_castps_si256(_mm256_shuffle_ps(fa, fb, _MM_SHUFFLE(3, 1, 3, 1)));
  }
}

__attribute__((target("avx2"))) inline void join(int half, __m256i u, __m256i v, __m256i& a, __m256i& b) {
  if (half == 4) {
    a = _mm256_permute2x128_si256(u, v, 0x20);
    b = _mm256_permute2x128_si256(u, v, 0x31);
  } else if (half == 2) {
    a = _mm256_unpacklo_epi64(u, v);
    b = _mm256_unpackhi_epi64(u, v);
  } else {
    a = _mm256_unpacklo_epi32(u, v);
    b = _mm256_unpackhi_epi32(u, v);
  }
}

__attribute__((target("avx2"))) void forward_tail_avx2(std::uint32_t* a, std::size_t n, const std::uint32_t* table,
                                                       std::uint32_t p, std::uint32_t ninv) {
  const Lanes L = make_lanes(p, ninv);
  const Tail tw = tail_twiddles(table);
  const __m256i ws[3] = {tw.w4, tw.w2, tw.w1};
  for (std::size_t s = 0; s < n; s += 16) {
    __m256i* q = reinterpret_cast<__m256i*>(a + s);
    __m256i x = _mm256_loadu_si256(q), y = _mm256_loadu_si256(q + 1);
    for (int st = 0; st < 3; ++st) {
      int half = 4 >> st;
      __m256i u, v;
      split(half, x, y, u, v);
      __m256i nu = Lanes::reduce(_mm256_add_epi32(u, v), L.p);
      __m256i nv = L.mul(_mm256_sub_epi32(_mm256_add_epi32(u, L.p), v), ws[st]);
      join(half, nu, nv, x, y);
    }
    _mm256_storeu_si256(q, x);
    _mm256_storeu_si256(q + 1, y);
  }
}

__attribute__((target("avx2"))) void inverse_head_avx2(std::uint32_t* a, std::size_t n, const std::uint32_t* table,
                                                       std::uint32_t p, std::uint32_t ninv) {
  const Lanes L = make_lanes(p, ninv);
  const Tail tw = tail_twiddles(table);
  const __m256i ws[3] = {tw.w1, tw.w2, tw.w4};
  for (std::size_t s = 0; s < n; s += 16) {
    __m256i* q = reinterpret_cast<__m256i*>(a + s);
    __m256i x = _mm256_loadu_si256(q), y = _mm256_loadu_si256(q + 1);
    for (int st = 0; st < 3; ++st) {
      int half = 1 << st;
      __m256i u, v;
      split(half, x, y, u, v);
      v = L.mul(v, ws[st]);
      __m256i nu = Lanes::reduce(_mm256_add_epi32(u, v), L.p);
      __m256i nv = Lanes::reduce(_mm256_sub_epi32(_mm256_add_epi32(u, L.p), v), L.p);
      join(half, nu, nv, x, y);
    }
    _mm256_storeu_si256(q, x);
    _mm256_storeu_si256(q + 1, y);
  }
}

__attribute__((target("avx2"))) void scale_avx2(std::uint32_t* a, std::size_t n, std::uint32_t k,
                                                std::uint32_t p, std::uint32_t ninv) {
  const Lanes L = make_lanes(p, ninv);
  const __m256i kv = _mm256_set1_epi32(static_cast<int>(k));
  for (std::size_t i = 0; i + 8 <= n; i += 8) {
    __m256i* q = reinterpret_cast<__m256i*>(a + i);
    _mm256_storeu_si256(q, L.mul(_mm256_loadu_si256(q), kv));
  }
}

}  // namespace

namespace {

// Passes whose butterfly groups fit in this many words run block by block,
// so they stay in cache; only the wider passes stream the whole array.
constexpr std::size_t kBlock = std::size_t{1} << 15;

}  // namespace

// Passes half = top .. bottom over a[0, n).
void Ntt::forward_passes(std::uint32_t* a, std::size_t n, std::size_t top, std::size_t bottom) {
  const std::uint32_t p = mod_;
  const bool wide = have_avx2();
  for (std::size_t half = top; half >= bottom; half >>= 1) {
    const std::uint32_t* w = fwd_.data() + half;
    if (wide && half >= 8) {
      forward_pass_avx2(a, n, half, w, p, ninv_);
      continue;
    }
    if (wide && half == 4 && bottom == 1 && n >= 16) {
      forward_tail_avx2(a, n, fwd_.data(), p, ninv_);
      break;
    }
    for (std::size_t s = 0; s < n; s += 2 * half) {
      std::uint32_t* x = a + s;
      std::uint32_t* y = x + half;
      for (std::size_t j = 0; j < half; ++j) {
        std::uint32_t u = x[j], v = y[j];
        std::uint32_t sum = u + v;
        x[j] = sum >= p ? sum - p : sum;
        y[j] = mul(u + p - v, w[j]);
      }
    }
  }
}

// Passes half = from .. top over a[0, n).
void Ntt::inverse_passes(std::uint32_t* a, std::size_t n, std::size_t from, std::size_t top) {
  const std::uint32_t p = mod_;
  const bool wide = have_avx2();
  if (from == 1 && wide && n >= 16 && top >= 4) {
    inverse_head_avx2(a, n, inv_.data(), p, ninv_);
    from = 8;
  }
  for (std::size_t half = from; half <= top; half <<= 1) {
    const std::uint32_t* w = inv_.data() + half;
    if (wide && half >= 8) {
      inverse_pass_avx2(a, n, half, w, p, ninv_);
      continue;
    }
    for (std::size_t s = 0; s < n; s += 2 * half) {
      std::uint32_t* x = a + s;
      std::uint32_t* y = x + half;
      for (std::size_t j = 0; j < half; ++j) {
        std::uint32_t u = x[j], v = mul(y[j], w[j]);
        std::uint32_t sum = u + v;
        x[j] = sum >= p ? sum - p : sum;
        y[j] = u >= v ? u - v : u + p - v;
      }
    }
  }
}

void Ntt::forward(std::uint32_t* a, std::size_t n) {
  if (n <= 1) return;
  prepare(n);
  const std::size_t block = std::min(n, kBlock);
  std::size_t half = n / 2;
  for (; half >= block; half >>= 1) forward_passes(a, n, half, half);
  for (std::size_t s = 0; s < n; s += block) forward_passes(a + s, block, block / 2, 1);
}

void Ntt::inverse(std::uint32_t* a, std::size_t n) {
  if (n == 0) return;
  prepare(n);
  if (n > 1) {
    const std::size_t block = std::min(n, kBlock);
    for (std::size_t s = 0; s < n; s += block) inverse_passes(a + s, block, 1, block / 2);
    for (std::size_t half = block; half < n; half <<= 1) inverse_passes(a, n, half, half);
  }
  // Pointwise mul() left a factor 2^-32; the transform pair a factor n.
  const std::uint32_t p = mod_;
  std::uint64_t r2 = pow(2, 64);
  std::uint64_t k = r2 * pow(n % mod_, mod_ - 2) % mod_;
  const auto kk = static_cast<std::uint32_t>(k);
  std::size_t i = 0;
  if (have_avx2()) {
    scale_avx2(a, n, kk, p, ninv_);
    i = n - n % 8;
  }
  for (; i < n; ++i) a[i] = mul(a[i], kk);
}

void Ntt::pointwise(std::uint32_t* out, const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
                    bool accumulate) const {
  std::size_t i = 0;
  if (have_avx2()) {
    pointwise_avx2(out, x, y, n, accumulate, mod_, ninv_);
    i = n - n % 8;
  }
  for (; i < n; ++i) out[i] = accumulate ? add(out[i], mul(x[i], y[i])) : mul(x[i], y[i]);
}

Ntt& ntt_prime(int which) {
  static Ntt p0(2013265921u, 31u), p1(1811939329u, 13u), p2(469762049u, 3u);
  switch (which) {
    case 0: return p0;
    case 1: return p1;
    case 2: return p2;
  }
  throw std::out_of_range("ntt_prime");
}

namespace {

std::mutex g_ntt_mutex;

std::vector<std::uint32_t> one_prime(Ntt& ntt, std::span<const std::uint32_t> a,
                                     std::span<const std::uint32_t> b, std::size_t out_len) {
  std::size_t n = next_pow2(out_len);
  std::vector<std::uint32_t> fa(n, 0), fb(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i] % ntt.mod();
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i] % ntt.mod();
  ntt.forward(fa.data(), n);
  ntt.forward(fb.data(), n);
  for (std::size_t i = 0; i < n; ++i) fa[i] = ntt.mul(fa[i], fb[i]);
  ntt.inverse(fa.data(), n);
  fa.resize(out_len);
  return fa;
}

}  // namespace

std::vector<std::uint64_t> convolve_exact(std::span<const std::uint32_t> a,
                                          std::span<const std::uint32_t> b, std::uint64_t bound) {
  if (a.empty() || b.empty()) return {};
  std::size_t out_len = a.size() + b.size() - 1;
  std::lock_guard<std::mutex> lock(g_ntt_mutex);
  Ntt& p0 = ntt_prime(0);
  std::vector<std::uint64_t> out(out_len);
  if (bound <= p0.mod()) {
    auto r = one_prime(p0, a, b, out_len);
    std::copy(r.begin(), r.end(), out.begin());
    return out;
  }
  Ntt& p1 = ntt_prime(1);
  unsigned __int128 prod = static_cast<unsigned __int128>(p0.mod()) * p1.mod();
  if (bound > prod) throw std::overflow_error("convolve_exact: coefficient bound too large");
  auto r0 = one_prime(p0, a, b, out_len);
  auto r1 = one_prime(p1, a, b, out_len);
  // x = r0 + p0 * ((r1 - r0) * p0^{-1} mod p1)
  std::uint64_t m0 = p0.mod(), m1 = p1.mod();
  std::uint64_t inv = p1.pow(m0 % m1, m1 - 2);
  for (std::size_t i = 0; i < out_len; ++i) {
    std::uint64_t d = (r1[i] + m1 - r0[i] % m1) % m1;
    std::uint64_t t = d * inv % m1;
    out[i] = r0[i] + m0 * t;
  }
  return out;
}

Poly3 poly_mult_3var(const Poly3& p, const Poly3& q) {
  for (const Poly3* f : {&p, &q})
    for (const auto& t : f->terms)
      if (t.x < 0 || t.y < 0 || t.z < 0 || t.x > f->dx || t.y > f->dy || t.z > f->dz)
        throw std::invalid_argument("poly_mult_3var: term outside degree bounds");
  Poly3 r;
  r.dx = p.dx + q.dx;
  r.dy = p.dy + q.dy;
  r.dz = p.dz + q.dz;
  if (p.terms.empty() || q.terms.empty()) return r;
  // Kronecker strides sized for the product's degrees.
  std::int64_t sy = r.dx + 1, sz = sy * (r.dy + 1);
  auto pack = [&](const Poly3& f, std::int64_t dz, std::uint64_t& mag) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(sz * (dz + 1)), 0);
    mag = 0;
    for (const auto& t : f.terms) {
      auto& slot = v[static_cast<std::size_t>(t.x + sy * t.y + sz * t.z)];
      std::uint64_t c = slot + t.coef;
      if (c >= (1u << 31)) throw std::overflow_error("poly_mult_3var: coefficient too large");
      slot = static_cast<std::uint32_t>(c);
    }
    for (auto c : v) mag += c;
    return v;
  };
  std::uint64_t ma, mb;
  auto a = pack(p, p.dz, ma);
  auto b = pack(q, q.dz, mb);
  unsigned __int128 bound = static_cast<unsigned __int128>(ma) * mb + 1;
  if (bound > (static_cast<unsigned __int128>(1) << 62)) throw std::overflow_error("poly_mult_3var: bound");
  auto c = convolve_exact(a, b, static_cast<std::uint64_t>(bound));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    std::int64_t idx = static_cast<std::int64_t>(i);
    r.terms.push_back({idx % sy, (idx % sz) / sy, idx / sz, c[i]});
  }
  return r;
}

}  // namespace tk::conv
