#include "tropknap/core/seed.hpp"

#include <stdexcept>

namespace tk {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SeedCtx SeedCtx::child(std::uint64_t tag) const {
  SeedCtx c = *this;
  c.path_.push_back(tag);
  return c;
}

std::uint64_t SeedCtx::key() const {
  std::uint64_t h = splitmix64(seed_);
  for (std::uint64_t t : path_) h = splitmix64(h ^ splitmix64(t + 0x632be59bd9b4e019ULL));
  return h;
}

std::string SeedCtx::describe() const {
  std::string s = std::to_string(seed_);
  for (std::uint64_t t : path_) s += "/" + std::to_string(t);
  return s;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x <= limit) return x % bound;
  }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::between: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  return lo + static_cast<std::int64_t>(below(span));
}

}  // namespace tk
