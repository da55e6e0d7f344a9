#include "tropknap/solver/plan.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace tk::solver {

std::int64_t plan_eta(std::size_t n) {
  int lg = n <= 1 ? 0 : std::bit_width(n - 1);
  return 17 * static_cast<std::int64_t>(lg);
}

int largest_pow2_exponent(long double bound, std::size_t n) {
  int q = 0;
  while (std::ldexp(1.0L, q + 1) <= bound && (std::uint64_t{1} << (q + 1)) <= n) ++q;
  return q;
}

namespace {

IntInterval scaled(IntInterval w, int l, std::int64_t spread, std::int64_t eta) {
  long double d = std::ldexp(1.0L, l);
  long double r = std::sqrt(static_cast<long double>(spread) / d) * static_cast<long double>(eta);
  long double lo = std::floor(static_cast<long double>(w.lo) / d - r);
  long double hi = std::ceil(static_cast<long double>(w.hi) / d + r);
  IntInterval out{lo < 0 ? 0 : static_cast<std::int64_t>(lo),
                  hi > static_cast<long double>(w.hi) ? w.hi : static_cast<std::int64_t>(hi)};
  return out;
}

}  // namespace

TreeLevelPlan make_plan(int q, std::size_t n, IntInterval index_final, IntInterval value_final,
                        std::int64_t index_spread, std::int64_t value_spread) {
  if (q < 0) throw std::invalid_argument("make_plan: negative depth");
  TreeLevelPlan p;
  p.q = q;
  p.eta = plan_eta(n);
  p.index_spread = index_spread;
  p.value_spread = value_spread;
  p.index_final = index_final;
  p.value_final = value_final;
  for (int l = 0; l <= q; ++l) {
    p.index_at.push_back(scaled(index_final, l, index_spread, p.eta));
    p.value_at.push_back(scaled(value_final, l, value_spread, p.eta));
  }
  p.index_base = {0, p.index_at[static_cast<std::size_t>(q)].hi};
  p.value_base = {0, p.value_at[static_cast<std::size_t>(q)].hi};
  return p;
}

}  // namespace tk::solver
