#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "tropknap/core/ext_int.hpp"

namespace tk {

enum class Direction { non_decreasing, non_increasing, unknown };
enum class Sentinel { neg_inf, pos_inf };

// Closed integer interval; empty when lo > hi.
struct IntInterval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const { return lo > hi; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  std::int64_t length() const { return empty() ? 0 : hi - lo + 1; }
  bool operator==(const IntInterval&) const = default;
};

IntInterval intersect(IntInterval a, IntInterval b);
// Smallest interval containing both (an empty side is ignored).
IntInterval hull(IntInterval a, IntInterval b);

// A sequence over the absolute index window [start, start + size).
// Reads outside the window return the sentinel.
class MonotoneSeq {
 public:
  MonotoneSeq() = default;
  MonotoneSeq(std::int64_t start, std::vector<ExtInt> values, Direction dir, Sentinel sentinel);

  static MonotoneSeq from(std::initializer_list<ExtInt> values,
                          Direction dir = Direction::non_decreasing,
                          Sentinel sentinel = Sentinel::pos_inf, std::int64_t start = 0);

  std::int64_t start() const { return start_; }
  std::int64_t end() const { return start_ + static_cast<std::int64_t>(values_.size()); }
  std::int64_t last() const { return end() - 1; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  Direction direction() const { return dir_; }
  Sentinel sentinel() const { return sentinel_; }
  ExtInt sentinel_value() const;
  IntInterval index_range() const { return {start_, last()}; }

  ExtInt at(std::int64_t index) const;
  bool in_window(std::int64_t index) const { return index >= start_ && index < end(); }

  const std::vector<ExtInt>& values() const { return values_; }
  std::vector<ExtInt>& mutable_values() { return values_; }

  MonotoneSeq with_direction(Direction d) const;
  MonotoneSeq with_sentinel(Sentinel s) const;
  MonotoneSeq shifted_index(std::int64_t delta) const;

  // True when the finite entries respect the direction tag (always true for unknown).
  bool finite_entries_monotone() const;
  // True when all entries, infinities included, respect the direction tag.
  bool extended_monotone() const;

  // Entry-for-entry equality over the window (empty sequences compare equal
  // whatever their start). Direction and sentinel tags are not compared.
  bool same_entries(const MonotoneSeq& other) const;
  bool operator==(const MonotoneSeq& other) const { return same_entries(other); }

 private:
  std::int64_t start_ = 0;
  std::vector<ExtInt> values_;
  Direction dir_ = Direction::unknown;
  Sentinel sentinel_ = Sentinel::pos_inf;
};

std::ostream& operator<<(std::ostream& os, const MonotoneSeq& s);

// Maximal contiguous subarray with indices in `index` and finite values in
// `value`, located by binary search. Requires a monotone direction and that
// the sequence is monotone in the extended order.
MonotoneSeq restrict(const MonotoneSeq& seq, IntInterval index, IntInterval value);

// Same contract evaluated by a linear scan of the definition.
MonotoneSeq restrict_linear(const MonotoneSeq& seq, IntInterval index, IntInterval value);

// pm[i] = max of the entries up to i. Entries must be finite.
MonotoneSeq prefix_maxima(const MonotoneSeq& seq);

// Entrywise M - value. Flips direction and sentinel. Finite entries must lie in [0, M].
MonotoneSeq negate_shift(const MonotoneSeq& seq, std::int64_t M);

// rev[i] = seq[-i]: the window [s, e) becomes [-(e-1), -s+1). Involution.
MonotoneSeq reverse_index(const MonotoneSeq& seq);

// Entrywise min (max) of two sequences over the union window, reading sentinels outside.
MonotoneSeq pointwise_min(const MonotoneSeq& a, const MonotoneSeq& b);
MonotoneSeq pointwise_max(const MonotoneSeq& a, const MonotoneSeq& b);

// Replace finite values above `cap` by cap + 1 (used to saturate profit sequences).
MonotoneSeq saturate_above(const MonotoneSeq& seq, std::int64_t cap);

// Keep only indices in `index` (values untouched).
MonotoneSeq clip_index(const MonotoneSeq& seq, IntInterval index);

}  // namespace tk
