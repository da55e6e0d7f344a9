#include "tropknap/core/ext_int.hpp"

#include <stdexcept>

namespace tk {

namespace {

ExtInt finite_sum(ExtInt::rep a, ExtInt::rep b) {
  ExtInt::rep r;
  if (__builtin_add_overflow(a, b, &r) || r == ExtInt::kPosInf || r == ExtInt::kNegInf)
    throw std::overflow_error("ExtInt: finite overflow");
  return ExtInt(r);
}

}  // namespace

ExtInt::rep ExtInt::value() const {
  if (!finite()) throw std::domain_error("ExtInt: value() of an infinity");
  return raw_;
}

ExtInt ExtInt::operator-() const {
  if (raw_ == kPosInf) return neg_inf();
  if (raw_ == kNegInf) return pos_inf();
  return ExtInt(-raw_);
}

ExtInt operator+(ExtInt a, ExtInt b) {
  if (a.finite() && b.finite()) return finite_sum(a.raw(), b.raw());
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
    throw std::domain_error("ExtInt: +inf + -inf is undefined");
  return a.finite() ? b : a;
}

ExtInt add_minplus(ExtInt a, ExtInt b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtInt::pos_inf();
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtInt::neg_inf();
  return finite_sum(a.raw(), b.raw());
}

ExtInt add_maxplus(ExtInt a, ExtInt b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtInt::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtInt::pos_inf();
  return finite_sum(a.raw(), b.raw());
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("checked_add overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("checked_mul overflow");
  return r;
}

std::string ExtInt::str() const {
  if (raw_ == kPosInf) return "inf";
  if (raw_ == kNegInf) return "-inf";
  return std::to_string(raw_);
}

std::ostream& operator<<(std::ostream& os, ExtInt x) { return os << x.str(); }

}  // namespace tk
