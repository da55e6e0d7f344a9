#include "tropknap/core/monotone_seq.hpp"

#include <algorithm>
#include <stdexcept>

namespace tk {

IntInterval intersect(IntInterval a, IntInterval b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

IntInterval hull(IntInterval a, IntInterval b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

MonotoneSeq::MonotoneSeq(std::int64_t start, std::vector<ExtInt> values, Direction dir,
                         Sentinel sentinel)
    : start_(start), values_(std::move(values)), dir_(dir), sentinel_(sentinel) {}

MonotoneSeq MonotoneSeq::from(std::initializer_list<ExtInt> values, Direction dir,
                              Sentinel sentinel, std::int64_t start) {
  return MonotoneSeq(start, std::vector<ExtInt>(values), dir, sentinel);
}

ExtInt MonotoneSeq::sentinel_value() const {
  return sentinel_ == Sentinel::pos_inf ? ExtInt::pos_inf() : ExtInt::neg_inf();
}

ExtInt MonotoneSeq::at(std::int64_t index) const {
  if (!in_window(index)) return sentinel_value();
  return values_[static_cast<std::size_t>(index - start_)];
}

MonotoneSeq MonotoneSeq::with_direction(Direction d) const {
  MonotoneSeq r = *this;
  r.dir_ = d;
  return r;
}

MonotoneSeq MonotoneSeq::with_sentinel(Sentinel s) const {
  MonotoneSeq r = *this;
  r.sentinel_ = s;
  return r;
}

MonotoneSeq MonotoneSeq::shifted_index(std::int64_t delta) const {
  MonotoneSeq r = *this;
  r.start_ += delta;
  return r;
}

bool MonotoneSeq::finite_entries_monotone() const {
  if (dir_ == Direction::unknown) return true;
  const ExtInt* prev = nullptr;
  for (const ExtInt& v : values_) {
    if (!v.finite()) continue;
    if (prev) {
      if (dir_ == Direction::non_decreasing && v < *prev) return false;
      if (dir_ == Direction::non_increasing && v > *prev) return false;
    }
    prev = &v;
  }
  return true;
}

bool MonotoneSeq::extended_monotone() const {
  if (dir_ == Direction::unknown) return true;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (dir_ == Direction::non_decreasing && values_[i] < values_[i - 1]) return false;
    if (dir_ == Direction::non_increasing && values_[i] > values_[i - 1]) return false;
  }
  return true;
}

bool MonotoneSeq::same_entries(const MonotoneSeq& other) const {
  if (empty() && other.empty()) return true;
  return start_ == other.start_ && values_ == other.values_;
}

std::ostream& operator<<(std::ostream& os, const MonotoneSeq& s) {
  os << "@" << s.start() << "[";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.values()[i];
  return os << "]";
}

namespace {

MonotoneSeq slice(const MonotoneSeq& seq, std::int64_t first, std::int64_t last) {
  if (first > last) return MonotoneSeq(0, {}, seq.direction(), seq.sentinel());
  auto b = seq.values().begin() + (first - seq.start());
  auto e = seq.values().begin() + (last - seq.start() + 1);
  return MonotoneSeq(first, std::vector<ExtInt>(b, e), seq.direction(), seq.sentinel());
}

bool in_values(ExtInt v, IntInterval value) {
  return v.finite() && value.contains(v.raw());
}

}  // namespace

MonotoneSeq restrict(const MonotoneSeq& seq, IntInterval index, IntInterval value) {
  if (seq.direction() == Direction::unknown)
    throw std::invalid_argument("restrict: sequence direction is unknown");
  IntInterval w = intersect(index, seq.index_range());
  if (w.empty() || value.empty()) return slice(seq, 1, 0);
  const auto& v = seq.values();
  auto lo_it = v.begin() + (w.lo - seq.start());
  auto hi_it = v.begin() + (w.hi - seq.start() + 1);
  ExtInt vlo(value.lo), vhi(value.hi);
  decltype(lo_it) first, past;
  if (seq.direction() == Direction::non_decreasing) {
    first = std::partition_point(lo_it, hi_it, [&](ExtInt x) { return x < vlo; });
    past = std::partition_point(first, hi_it, [&](ExtInt x) { return x <= vhi; });
  } else {
    first = std::partition_point(lo_it, hi_it, [&](ExtInt x) { return x > vhi; });
    past = std::partition_point(first, hi_it, [&](ExtInt x) { return x >= vlo; });
  }
  std::int64_t a = seq.start() + (first - v.begin());
  std::int64_t b = seq.start() + (past - v.begin()) - 1;
  return slice(seq, a, b);
}

MonotoneSeq restrict_linear(const MonotoneSeq& seq, IntInterval index, IntInterval value) {
  if (seq.direction() == Direction::unknown)
    throw std::invalid_argument("restrict: sequence direction is unknown");
  std::int64_t first = 1, last = 0;
  bool found = false;
  for (std::int64_t i = seq.start(); i < seq.end(); ++i) {
    if (!index.contains(i) || !in_values(seq.at(i), value)) continue;
    if (!found) first = i;
    last = i;
    found = true;
  }
  if (!found) return slice(seq, 1, 0);
  return slice(seq, first, last);
}

MonotoneSeq prefix_maxima(const MonotoneSeq& seq) {
  std::vector<ExtInt> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seq.values()[i].finite()) throw std::invalid_argument("prefix_maxima: infinite entry");
    out[i] = i ? std::max(out[i - 1], seq.values()[i]) : seq.values()[i];
  }
  return MonotoneSeq(seq.start(), std::move(out), Direction::non_decreasing, seq.sentinel());
}

MonotoneSeq negate_shift(const MonotoneSeq& seq, std::int64_t M) {
  std::vector<ExtInt> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    ExtInt v = seq.values()[i];
    if (v.finite() && (v.raw() < 0 || v.raw() > M))
      throw std::out_of_range("negate_shift: entry outside [0, M]");
    out[i] = v.finite() ? ExtInt(M - v.raw()) : -v;
  }
  Direction d = seq.direction();
  if (d == Direction::non_decreasing) d = Direction::non_increasing;
  else if (d == Direction::non_increasing) d = Direction::non_decreasing;
  Sentinel s = seq.sentinel() == Sentinel::pos_inf ? Sentinel::neg_inf : Sentinel::pos_inf;
  return MonotoneSeq(seq.start(), std::move(out), d, s);
}

MonotoneSeq reverse_index(const MonotoneSeq& seq) {
  std::vector<ExtInt> out(seq.values().rbegin(), seq.values().rend());
  Direction d = seq.direction();
  if (d == Direction::non_decreasing) d = Direction::non_increasing;
  else if (d == Direction::non_increasing) d = Direction::non_decreasing;
  std::int64_t start = seq.empty() ? 0 : -seq.last();
  return MonotoneSeq(start, std::move(out), d, seq.sentinel());
}

namespace {

template <class Pick>
MonotoneSeq pointwise(const MonotoneSeq& a, const MonotoneSeq& b, Pick pick) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::int64_t s = std::min(a.start(), b.start());
  std::int64_t e = std::max(a.end(), b.end());
  std::vector<ExtInt> out(static_cast<std::size_t>(e - s));
  for (std::int64_t i = s; i < e; ++i) out[static_cast<std::size_t>(i - s)] = pick(a.at(i), b.at(i));
  Direction d = a.direction() == b.direction() ? a.direction() : Direction::unknown;
  return MonotoneSeq(s, std::move(out), d, a.sentinel());
}

}  // namespace

MonotoneSeq pointwise_min(const MonotoneSeq& a, const MonotoneSeq& b) {
  return pointwise(a, b, [](ExtInt x, ExtInt y) { return std::min(x, y); });
}

MonotoneSeq pointwise_max(const MonotoneSeq& a, const MonotoneSeq& b) {
  return pointwise(a, b, [](ExtInt x, ExtInt y) { return std::max(x, y); });
}

MonotoneSeq saturate_above(const MonotoneSeq& seq, std::int64_t cap) {
  MonotoneSeq r = seq;
  for (ExtInt& v : r.mutable_values())
    if (v.finite() && v.raw() > cap) v = ExtInt(cap + 1);
  return r;
}

MonotoneSeq clip_index(const MonotoneSeq& seq, IntInterval index) {
  IntInterval w = intersect(index, seq.index_range());
  return slice(seq, w.lo, w.hi);
}

}  // namespace tk
