#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace tk {

// A 64-bit integer extended by +inf and -inf. The two extreme int64 values
// encode the infinities, so a vector<ExtInt> has the layout of vector<int64_t>.
// Finite arithmetic that would leave the finite range throws std::overflow_error.
class ExtInt {
 public:
  using rep = std::int64_t;
  static constexpr rep kPosInf = std::numeric_limits<rep>::max();
  static constexpr rep kNegInf = std::numeric_limits<rep>::min();

  constexpr ExtInt() = default;
  constexpr ExtInt(rep raw) : raw_(raw) {}  // NOLINT: implicit by design

  static constexpr ExtInt pos_inf() { return ExtInt(kPosInf); }
  static constexpr ExtInt neg_inf() { return ExtInt(kNegInf); }

  constexpr bool finite() const { return raw_ != kPosInf && raw_ != kNegInf; }
  constexpr bool is_pos_inf() const { return raw_ == kPosInf; }
  constexpr bool is_neg_inf() const { return raw_ == kNegInf; }
  constexpr rep raw() const { return raw_; }
  // Throws if not finite.
  rep value() const;

  constexpr auto operator<=>(const ExtInt&) const = default;

  ExtInt operator-() const;
  // Plain addition: an infinity absorbs finite values, +inf + -inf throws.
  friend ExtInt operator+(ExtInt a, ExtInt b);
  friend ExtInt operator-(ExtInt a, ExtInt b) { return a + (-b); }

  std::string str() const;

 private:
  rep raw_ = 0;
};

// Semiring additions. In min-plus +inf annihilates, in max-plus -inf does.
ExtInt add_minplus(ExtInt a, ExtInt b);
ExtInt add_maxplus(ExtInt a, ExtInt b);

// Checked finite arithmetic on plain int64.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::ostream& operator<<(std::ostream& os, ExtInt x);

}  // namespace tk
