#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tk::conv {

// Number theoretic transform over one prime p < 2^31 with p - 1 divisible by a
// large power of two. Values are kept in plain form; twiddles carry the
// Montgomery factor so a butterfly multiply needs one reduction.
class Ntt {
 public:
  Ntt(std::uint32_t mod, std::uint32_t generator);

  std::uint32_t mod() const { return mod_; }
  int max_log() const { return max_log_; }

  // In place, size a power of two. forward: natural order in, bit-reversed out.
  void forward(std::uint32_t* a, std::size_t n);
  // Bit-reversed in, natural out, scaled so inverse(forward(x) * forward(y)) is x*y
  // when the pointwise product was taken with mul().
  void inverse(std::uint32_t* a, std::size_t n);

  // Montgomery product: x * y / 2^32 mod p. The inverse transform undoes the 2^-32.
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  // out[i] = x[i] * y[i] (Montgomery), or out[i] += x[i] * y[i] when accumulating.
  void pointwise(std::uint32_t* out, const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
                 bool accumulate) const;
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t r = x + y;
    return r >= mod_ ? r - mod_ : r;
  }

  std::uint64_t pow(std::uint64_t b, std::uint64_t e) const;

 private:
  void prepare(std::size_t n);
  void forward_passes(std::uint32_t* a, std::size_t n, std::size_t top, std::size_t bottom);
  void inverse_passes(std::uint32_t* a, std::size_t n, std::size_t from, std::size_t top);
  std::uint32_t mod_, gen_, ninv_;  // ninv_ = -p^{-1} mod 2^32
  int max_log_;
  std::size_t table_n_ = 0;
  std::vector<std::uint32_t> fwd_, inv_;  // Montgomery-form roots of order table_n_
};

// The transform-friendly primes used here.
Ntt& ntt_prime(int which);  // 0: 2013265921, 1: 1811939329, 2: 469762049

// Exact product of non-negative integer sequences. `bound` must exceed every
// result coefficient; one prime is used when it fits, else CRT over two.
std::vector<std::uint64_t> convolve_exact(std::span<const std::uint32_t> a,
                                          std::span<const std::uint32_t> b, std::uint64_t bound);

std::size_t next_pow2(std::size_t n);

// Sparse polynomial in x, y, z with non-negative coefficients.
struct Poly3 {
  struct Term {
    std::int64_t x, y, z;
    std::uint64_t coef;
  };
  std::vector<Term> terms;
  // Degree bounds; every term must respect them.
  std::int64_t dx = 0, dy = 0, dz = 0;
};

// Exact product by Kronecker packing (x innermost, then y, then z). Terms of
// the result are sorted by (z, y, x); zero terms omitted.
Poly3 poly_mult_3var(const Poly3& p, const Poly3& q);

}  // namespace tk::conv
