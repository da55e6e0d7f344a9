#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tk {

// Deterministic randomness context. A child stream is a function of the root
// seed and the path of tags leading to it, never of how many numbers other
// streams consumed.
class SeedCtx {
 public:
  explicit SeedCtx(std::uint64_t seed = 0) : seed_(seed) {}

  SeedCtx child(std::uint64_t tag) const;
  SeedCtx child(std::uint64_t tag, std::uint64_t tag2) const { return child(tag).child(tag2); }

  std::uint64_t seed() const { return seed_; }
  const std::vector<std::uint64_t>& path() const { return path_; }
  // splitmix64 hash of (seed, path).
  std::uint64_t key() const;
  std::string describe() const;  // "seed/a/b/c"

 private:
  std::uint64_t seed_;
  std::vector<std::uint64_t> path_;
};

// Generator bound to one stream. Bounded draws use rejection sampling so the
// output does not depend on the standard library's distribution code.
class Rng {
 public:
  explicit Rng(const SeedCtx& ctx) : eng_(ctx.key()) {}
  std::uint64_t next() { return eng_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi]; lo <= hi.
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace tk
