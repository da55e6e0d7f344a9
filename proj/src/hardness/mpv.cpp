#include "tropknap/hardness/mpv.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace tk::hardness {

void validate(const MPVInstance& m) {
  const std::int64_t n = m.n();
  if (n < 1 || static_cast<std::int64_t>(m.b.size()) != n || static_cast<std::int64_t>(m.c.size()) != 2 * n - 1)
    throw std::invalid_argument("mpv: lengths must be n, n, 2n - 1 with n >= 1");
  for (const auto* v : {&m.a, &m.b, &m.c})
    for (std::int64_t x : *v)
      if (x < 0 || x > n) throw std::invalid_argument("mpv: entries must lie in [0, n]");
}

bool verify_naive(const MPVInstance& m) {
  validate(m);
  const std::size_t n = m.a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.c[i + j] > m.a[i] + m.b[j]) return false;
  return true;
}

std::vector<std::int64_t> monotonized(const std::vector<std::int64_t>& x, std::int64_t n) {
  std::vector<std::int64_t> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + static_cast<std::int64_t>(i) * n;
  return r;
}

namespace {

void need_two(const MPVInstance& m) {
  validate(m);
  if (m.n() < 2) throw std::invalid_argument("mpv gadget: n must be at least 2");
}

}  // namespace

KnapsackInstance gadget_small_weights(const MPVInstance& m) {
  need_two(m);
  const std::int64_t n = m.n();
  auto A = monotonized(m.a, n), B = monotonized(m.b, n), C = monotonized(m.c, n);
  std::vector<std::pair<std::int64_t, std::int64_t>> items;
  for (std::int64_t i = 0; i < n; ++i) items.emplace_back(5 * n - i, 2 * n * n - A[static_cast<std::size_t>(i)]);
  for (std::int64_t j = 0; j < n; ++j) items.emplace_back(10 * n - j, 10 * n * n - B[static_cast<std::size_t>(j)]);
  for (std::int64_t k = 0; k <= 2 * n - 2; ++k) items.emplace_back(20 * n + k, 100 * n * n + C[static_cast<std::size_t>(k)]);
  return KnapsackInstance(std::move(items), 35 * n);
}

KnapsackInstance gadget_small_profits(const MPVInstance& m) {
  need_two(m);
  const std::int64_t n = m.n();
  auto A = monotonized(m.a, n), B = monotonized(m.b, n), C = monotonized(m.c, n);
  std::vector<std::pair<std::int64_t, std::int64_t>> items;
  for (std::int64_t i = 0; i < n; ++i) items.emplace_back(5 * n * n + A[static_cast<std::size_t>(i)], 2 * n + i);
  for (std::int64_t j = 0; j < n; ++j) items.emplace_back(10 * n * n + B[static_cast<std::size_t>(j)], 10 * n + j);
  for (std::int64_t k = 0; k <= 2 * n - 2; ++k) items.emplace_back(20 * n * n - C[static_cast<std::size_t>(k)], 100 * n - k);
  return KnapsackInstance(std::move(items), 35 * n * n - 1);
}

MPVInstance read_mpv(std::istream& in) {
  std::int64_t n;
  if (!(in >> n) || n < 1) throw std::invalid_argument("mpv: bad header");
  MPVInstance m;
  auto take = [&](std::vector<std::int64_t>& v, std::int64_t len) {
    v.resize(static_cast<std::size_t>(len));
    for (auto& x : v)
      if (!(in >> x)) throw std::invalid_argument("mpv: missing entries");
  };
  take(m.a, n);
  take(m.b, n);
  take(m.c, 2 * n - 1);
  validate(m);
  return m;
}

void write_mpv(std::ostream& out, const MPVInstance& m) {
  out << m.n() << '\n';
  for (const auto* v : {&m.a, &m.b, &m.c}) {
    for (std::size_t i = 0; i < v->size(); ++i) out << (i ? " " : "") << (*v)[i];
    out << '\n';
  }
}

}  // namespace tk::hardness
