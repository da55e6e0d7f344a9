#include "tropknap/harness/budget.hpp"

#include <algorithm>
#include <bit>

namespace tk::harness {

int budget_retries(std::size_t n) {
  if (n <= 2) return 1;
  return static_cast<int>(std::bit_width(n - 1));
}

std::uint64_t median_work(std::vector<std::uint64_t> samples) {
  if (samples.empty()) return 0;
  auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
  std::nth_element(samples.begin(), mid, samples.end());
  return *mid;
}

}  // namespace tk::harness
