// Arithmetic on canonical RN-encodings. Every operation here is exact; the
// only rounding is an explicit truncate_at by the caller.
#pragma once

#include "rnarith/rn_fixed.hpp"

namespace rnarith {

namespace detail {

inline void require_same_unit(const RnFixed& a, const RnFixed& b, const char* op) {
  if (a.lsb_exp() != b.lsb_exp())
    throw contract_error(std::string(op) + ": operands must share the same LSB weight");
}

inline int checked_width(int w, const char* op) {
  if (w > kMaxWidth) throw contract_error(std::string(op) + ": result wider than supported");
  return w;
}

inline int sign_of(Word v) { return (v > 0) - (v < 0); }

}  // namespace detail

/// (a + b + (ra & rb)u, ra | rb), one bit wider than the wider operand.
inline RnFixed add(const RnFixed& a, const RnFixed& b) {
  detail::require_same_unit(a, b, "add");
  const int w = detail::checked_width(std::max(a.width(), b.width()) + 1, "add");
  const Word carry_in = (a.round() && b.round()) ? 1 : 0;
  return {a.bits() + b.bits() + carry_in, w, a.lsb_exp(), a.round() || b.round()};
}

/// The dual rule (a + b + (ra | rb)u, ra & rb): x - x gives (0,0), but the
/// neutral element becomes (-u, 1).
inline RnFixed add_alt(const RnFixed& a, const RnFixed& b) {
  detail::require_same_unit(a, b, "add_alt");
  const int w = detail::checked_width(std::max(a.width(), b.width()) + 1, "add_alt");
  const Word carry_in = (a.round() || b.round()) ? 1 : 0;
  return {a.bits() + b.bits() + carry_in, w, a.lsb_exp(), a.round() && b.round()};
}

inline RnFixed sub(const RnFixed& a, const RnFixed& b) { return add(a, negate(b)); }

/// Appends k copies of the round bit, which shifts in zero digits.
/// The word is read at the same LSB weight, so the value scales by 2^k.
inline RnFixed shift_left(const RnFixed& x, int k) {
  if (k < 0) throw contract_error("shift_left: negative shift count");
  if (k == 0) return x;
  const int w = detail::checked_width(x.width() + k, "shift_left");
  const Word fill = x.round() ? detail::low_mask(k) : Word(0);
  return {(x.bits() << k) | fill, w, x.lsb_exp(), x.round()};
}

/// Product at LSB weight u^2: for nonnegative words p = ab + a*rb + b*ra with
/// round bit ra & rb. Negative words are complemented first and the product
/// complemented back, as in sign-magnitude multiplication.
inline RnFixed mul(const RnFixed& a, const RnFixed& b) {
  detail::require_same_unit(a, b, "mul");
  if (a.lsb_exp() > 0) throw contract_error("mul: unit must not exceed 1");
  const int w = detail::checked_width(a.width() + b.width() - 1, "mul");
  const bool neg_a = a.sign_bit();
  const bool neg_b = b.sign_bit();
  const RnFixed x = neg_a ? negate(a) : a;
  const RnFixed y = neg_b ? negate(b) : b;
  const Word p = x.bits() * y.bits() + (y.round() ? x.bits() : 0) + (x.round() ? y.bits() : 0);
  const RnFixed product(p, w, 2 * a.lsb_exp(), x.round() && y.round());
  return neg_a != neg_b ? negate(product) : product;
}

/// How the dividend and divisor are formed from their encodings.
enum class DivForm {
  midpoint,  ///< (x + rx*u/2) / (y + ry*u/2): the extended bit strings
  value,     ///< (x + rx*u) / (y + ry*u): the encoded values
};

struct DivResult {
  /// p fraction bits after normalization (p+1 when the quotient is below 1,
  /// so its value approximates q directly) plus the round bit.
  RnFixed quotient;
  /// The long-division remainder was zero: approx equals q.
  bool exact;
  /// q truncated to p+2 fraction bits, p+3 when q < 1.
  RnFixed approx;
  /// approx < q (the long division left a nonzero remainder).
  bool approx_below;
  /// 1 when q < 1 forced a left shift.
  int shift;
  /// Sign of q - value_of(quotient) after the round-bit correction.
  int remainder_sign;
  /// The round bit was inverted to agree with the remainder sign.
  bool corrected;
};

/// Quotient of normalized nonnegative operands (1 <= x, y < 2 with p
/// fraction bits) by restoring long division to two bits past the delivered
/// precision. The first of them is the preliminary round bit; it is inverted
/// when the remainder sign contradicts it.
inline DivResult div(const RnFixed& x, const RnFixed& y, int p, DivForm form = DivForm::midpoint) {
  if (p < 1 || 2 * p + 8 > kMaxWidth) throw contract_error("div: fraction bit count out of range");
  if (value_of(y).is_zero()) throw std::domain_error("div: division by zero");
  const Word one = Word(1) << p;
  const auto normalized = [&](const RnFixed& v) {
    return v.lsb_exp() == -p && v.bits() >= one && v.bits() < 2 * one;
  };
  if (!normalized(x) || !normalized(y)) throw contract_error("div: operands must satisfy 1 <= v < 2 with p fraction bits");

  Word dividend, divisor;
  if (form == DivForm::midpoint) {
    dividend = 2 * x.bits() + (x.round() ? 1 : 0);
    divisor = 2 * y.bits() + (y.round() ? 1 : 0);
  } else {
    dividend = x.bits() + (x.round() ? 1 : 0);
    divisor = y.bits() + (y.round() ? 1 : 0);
  }

  // Two bits past the delivered quotient, which gets one more fraction bit
  // when q < 1. Stopping at p+2 there would allow errors near u/4, and close
  // to q = 1/2 the lower interval bound is only about u/8 away.
  const int shift = dividend < divisor ? 1 : 0;
  const int frac_bits = p + 2 + shift;
  Word q = dividend / divisor;  // integer part, 0..2
  Word rem = dividend - q * divisor;
  for (int i = 0; i < frac_bits; ++i) {
    rem <<= 1;
    q <<= 1;
    if (rem >= divisor) {
      rem -= divisor;
      q |= 1;
    }
  }

  const RnFixed approx = RnFixed::compact(q, -frac_bits, false);
  const int dropped = 2;
  const Word kept = q >> dropped;
  bool round = detail::bit_at(q, dropped - 1);

  // sign of q_exact - (kept + round) * 2^dropped, scaled by 2^frac_bits * divisor
  const auto tail_sign = [&](bool r) {
    const Word delivered = (kept + (r ? 1 : 0)) << dropped;
    return detail::sign_of((q - delivered) * divisor + rem);
  };
  int s = tail_sign(round);
  bool corrected = false;
  if ((round && s > 0) || (!round && s < 0)) {
    round = !round;
    corrected = true;
    s = tail_sign(round);
  }
  return DivResult{RnFixed::compact(kept, -p - shift, round), rem == 0, approx, rem != 0, shift, s, corrected};
}

}  // namespace rnarith
