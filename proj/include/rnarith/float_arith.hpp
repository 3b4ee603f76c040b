// Floating point operations on RnFloat. Each operation forms its result
// exactly (or, for division, to two bits beyond the target plus a remainder
// flag) and rounds once by truncation. Directed roundings only rewrite the
// round bit afterwards; nothing is ever incremented.
#pragma once

#include "rnarith/fixed_arith.hpp"
#include "rnarith/float_format.hpp"

#include <utility>

namespace rnarith {

enum class RoundingMode {
  nearest,           ///< plain truncation
  toward_plus_inf,   ///< RU
  toward_minus_inf,  ///< RD
  toward_zero,       ///< RZ
  away_from_zero,    ///< RA
};

/// Whether anything nonzero was cut off by the final truncation.
struct StickyTail {
  bool nonzero = false;
  friend bool operator==(const StickyTail&, const StickyTail&) = default;
};

struct Rounded {
  RnFloat value;
  StickyTail sticky;
};

/// nonzero iff the kept encoding does not carry the exact value.
inline StickyTail sticky_of(const DyadicRational& exact, const RnFixed& kept) {
  return {value_of(kept) != exact};
}

/// Division form: the tail is nonzero iff the remainder is.
inline StickyTail sticky_of_remainder(bool remainder_nonzero) { return {remainder_nonzero}; }

/// Round bit after a directed rounding of a truncated result with sign bit
/// sign_bit. Unchanged when the tail is zero.
inline bool apply_directed_rounding(const RnFixed& kept, bool sign_bit, StickyTail t, RoundingMode mode) {
  if (!t.nonzero) return kept.round();
  switch (mode) {
    case RoundingMode::nearest: return kept.round();
    case RoundingMode::toward_plus_inf: return true;
    case RoundingMode::toward_minus_inf: return false;
    case RoundingMode::toward_zero: return sign_bit;
    case RoundingMode::away_from_zero: return !sign_bit;
  }
  return kept.round();
}

namespace detail {

/// Index of the leading digit once the word is left-normalized by shifting
/// in round-bit copies: the top non-sign bit, or -1 when every bit is a sign
/// bit (the shifted-in copies then supply it).
inline int leading_digit(const RnFixed& x) {
  const Word mag = x.bits() < 0 ? ~x.bits() : x.bits();
  return bit_length(mag) - 1;
}

inline bool is_zero_fixed(const RnFixed& x) { return x.bits() + (x.round() ? 1 : 0) == 0; }

inline std::uint64_t assemble(FloatFormat fmt, bool sign, int biased, const RnFixed& sig) {
  const int fb = fmt.fraction_bits();
  const auto frac = static_cast<std::uint64_t>(sig.bits() & low_mask(fb));
  return (std::uint64_t(sign) << (fmt.total_bits() - 1)) | (std::uint64_t(biased) << (fb + 1)) | (frac << 1) |
         std::uint64_t(sig.round());
}

}  // namespace detail

/// Rounds a value, given as an RnFixed at absolute weight, to the format.
///
/// With extra_tail the true value lies strictly beyond `exact` by less than
/// one LSB, on the side that no truncation above the LSB can tell apart (the
/// shape of a long-division quotient and its remainder).
///
/// Exact zero becomes +0. Inexact results that truncate to zero keep their
/// encoding so the round bit still reports the direction. Results beyond the
/// largest finite value overflow to infinity in every mode.
inline Rounded round_to_format(const RnFixed& exact, FloatFormat fmt, RoundingMode mode, bool extra_tail = false) {
  const int fb = fmt.fraction_bits();
  const int p = fmt.precision;
  if (detail::is_zero_fixed(exact) && !extra_tail) return {positive_zero(fmt), {}};

  int e = exact.lsb_exp() + detail::leading_digit(exact);
  const bool subnormal = e < fmt.emin();
  if (subnormal) e = fmt.emin();
  const int k = e - fb;

  const RnFixed kept_nearest = [&] {
    if (k > exact.lsb_exp()) return truncate_at(exact, k);
    if (extra_tail) throw contract_error("round_to_format: approximation too short for its tail");
    return shift_left(exact, exact.lsb_exp() - k).with_lsb_exp(k);
  }();

  bool inexact = extra_tail;
  if (!inexact && k > exact.lsb_exp()) {
    const int d = k - exact.lsb_exp();
    if (d >= exact.width()) {
      inexact = true;
    } else {
      const Word low = exact.bits() & detail::low_mask(d);
      const Word kept_low = kept_nearest.round() ? (Word(1) << d) : Word(0);
      inexact = low + (exact.round() ? 1 : 0) != kept_low;
    }
  }
  const StickyTail sticky{inexact};
  const bool negative = kept_nearest.sign_bit();
  const RnFixed kept = kept_nearest.with_round(apply_directed_rounding(kept_nearest, negative, sticky, mode));

  if (!subnormal && e > fmt.emax()) {
    // +-2^(emax+1) is still finite, at emax with the extreme significands.
    if (e == fmt.emax() + 1 && !inexact) {
      const Word target = Word(1) << fb;
      const Word v = kept.bits() + (kept.round() ? 1 : 0);
      if (v == target || v == -target) {
        const FixedRange ext = range_of(p + 1);
        const RnFixed sig = v > 0 ? ext.max : ext.min;
        return {RnFloat(fmt, detail::assemble(fmt, v < 0, fmt.max_biased_exp() - 1, sig)), sticky};
      }
    }
    return {infinity(fmt, negative), {true}};
  }
  const int biased = subnormal ? 0 : e + fmt.bias();
  return {RnFloat(fmt, detail::assemble(fmt, negative, biased, kept)), sticky};
}

// ---------------------------------------------------------------------------
// Addition

/// The unrounded outcome of an addition path: the exact sum at absolute weight.
struct PathResult {
  RnFixed sum;
  bool is_zero() const { return detail::is_zero_fixed(sum); }
};

namespace detail {

inline std::pair<RnFixed, RnFixed> align(const RnFixed& a, const RnFixed& b) {
  if (a.lsb_exp() == b.lsb_exp()) return {a, b};
  if (a.lsb_exp() > b.lsb_exp())
    return {shift_left(a, a.lsb_exp() - b.lsb_exp()).with_lsb_exp(b.lsb_exp()), b};
  return {a, shift_left(b, b.lsb_exp() - a.lsb_exp()).with_lsb_exp(a.lsb_exp())};
}

inline bool finite_nonzero(const RnFloat& f) {
  const FloatValue v = value_of_float(f);
  return v.is_finite() && !v.value.is_zero();
}

inline bool value_negative(const RnFloat& f) { return f.sign_bit(); }

inline int exponent_of(const RnFloat& f) { return unbiased_exp(unpack(f)); }

}  // namespace detail

/// Effective subtraction with exponents at most one apart: align by at most
/// one position, subtract, then left-normalize by shifting in copies of the
/// difference's round bit. The leading-digit count is taken on the
/// non-redundant difference.
inline PathResult near_path(const RnFloat& a, const RnFloat& b) {
  if (!detail::finite_nonzero(a) || !detail::finite_nonzero(b)) throw contract_error("near_path: operands must be finite and nonzero");
  if (a.sign_bit() == b.sign_bit()) throw contract_error("near_path: requires an effective subtraction");
  const int gap = detail::exponent_of(a) - detail::exponent_of(b);
  if (gap < -1 || gap > 1) throw contract_error("near_path: exponent gap exceeds one");

  const auto [x, y] = detail::align(scaled_significand(unpack(a)), scaled_significand(unpack(b)));
  RnFixed diff = add(x, y);
  if (detail::is_zero_fixed(diff)) return {RnFixed::zero(2, 0)};
  const int lead = detail::leading_digit(diff);
  const int target = a.format.fraction_bits();
  if (lead < target) {
    const int s = target - lead;
    diff = shift_left(diff, s).with_lsb_exp(diff.lsb_exp() - s);
  }
  return {diff};
}

/// Everything that is not the near path. The larger operand is left-shifted
/// over the gap with round-bit copies appended and the smaller one is
/// sign-extended, so the fixed-point addition is exact; the sum needs at most
/// one normalization shift. When the gap exceeds p+2 the smaller operand only
/// contributes its sign below the round position, so it is replaced by a
/// same-signed stand-in of an eighth of the larger operand's unit.
inline PathResult far_path(const RnFloat& a, const RnFloat& b) {
  if (!detail::finite_nonzero(a) || !detail::finite_nonzero(b)) throw contract_error("far_path: operands must be finite and nonzero");
  const int ea = detail::exponent_of(a);
  const int eb = detail::exponent_of(b);
  if (a.sign_bit() != b.sign_bit() && std::abs(ea - eb) <= 1) throw contract_error("far_path: this pair belongs to the near path");

  const bool a_larger = ea >= eb;
  const RnFloat& big = a_larger ? a : b;
  const RnFloat& small = a_larger ? b : a;
  const int gap = std::abs(ea - eb);
  const RnFixed x = scaled_significand(unpack(big));
  RnFixed y = scaled_significand(unpack(small));
  if (gap > a.format.precision + 2) y = RnFixed(small.sign_bit() ? -1 : 1, 2, x.lsb_exp() - 3, false);
  const auto [xs, ys] = detail::align(x, y);
  return {add(xs, ys)};
}

/// For exponents more than p apart: the larger operand with its round bit
/// replaced by the complement of the smaller operand's sign. The result
/// interval lies inside the larger operand's interval widened by the bound
/// [0 ; u/2] (or [-u/2 ; 0]) on the smaller operand.
inline RnFloat far_shortcut(const RnFloat& larger, const RnFloat& smaller) {
  if (classify(larger) != FloatClass::normal || !detail::finite_nonzero(smaller))
    throw contract_error("far_shortcut: needs a normal larger operand and a finite nonzero smaller one");
  if (detail::exponent_of(larger) <= detail::exponent_of(smaller) + larger.format.precision)
    throw contract_error("far_shortcut: exponent gap must exceed p");
  return {larger.format, (larger.word & ~std::uint64_t(1)) | std::uint64_t(!smaller.sign_bit())};
}

inline Rounded fadd_with_sticky(const RnFloat& a, const RnFloat& b, RoundingMode mode = RoundingMode::nearest) {
  if (!(a.format == b.format)) throw contract_error("fadd: operands use different formats");
  const FloatFormat fmt = a.format;
  const FloatClass ca = classify(a), cb = classify(b);
  if (ca == FloatClass::nan || cb == FloatClass::nan) return {canonical_nan(fmt), {}};
  if (ca == FloatClass::infinity || cb == FloatClass::infinity) {
    if (ca == FloatClass::infinity && cb == FloatClass::infinity && a.sign_bit() != b.sign_bit())
      return {canonical_nan(fmt), {}};
    return {infinity(fmt, ca == FloatClass::infinity ? a.sign_bit() : b.sign_bit()), {}};
  }
  const bool za = is_zero_value(a), zb = is_zero_value(b);
  if (za && zb) return {positive_zero(fmt), {}};
  if (za) return {b, {}};
  if (zb) return {a, {}};

  const int gap = std::abs(detail::exponent_of(a) - detail::exponent_of(b));
  const bool effective_sub = a.sign_bit() != b.sign_bit();
  const PathResult path = (effective_sub && gap <= 1) ? near_path(a, b) : far_path(a, b);
  return round_to_format(path.sum, fmt, mode);
}

inline RnFloat fadd(const RnFloat& a, const RnFloat& b, RoundingMode mode = RoundingMode::nearest) {
  return fadd_with_sticky(a, b, mode).value;
}

inline Rounded fsub_with_sticky(const RnFloat& a, const RnFloat& b, RoundingMode mode = RoundingMode::nearest) {
  return fadd_with_sticky(a, float_negate(b), mode);
}

inline RnFloat fsub(const RnFloat& a, const RnFloat& b, RoundingMode mode = RoundingMode::nearest) {
  return fsub_with_sticky(a, b, mode).value;
}

// ---------------------------------------------------------------------------
// Multiplication and division

inline Rounded fmul_with_sticky(const RnFloat& a, const RnFloat& b, RoundingMode mode = RoundingMode::nearest) {
  if (!(a.format == b.format)) throw contract_error("fmul: operands use different formats");
  const FloatFormat fmt = a.format;
  const FloatClass ca = classify(a), cb = classify(b);
  if (ca == FloatClass::nan || cb == FloatClass::nan) return {canonical_nan(fmt), {}};
  const bool za = is_zero_value(a), zb = is_zero_value(b);
  if (ca == FloatClass::infinity || cb == FloatClass::infinity) {
    if (za || zb) return {canonical_nan(fmt), {}};
    return {infinity(fmt, a.sign_bit() != b.sign_bit()), {}};
  }
  if (za || zb) return {positive_zero(fmt), {}};

  const UnpackedFloat ua = unpack(a), ub = unpack(b);
  const RnFixed product = mul(ua.significand, ub.significand);
  const int lsb = product.lsb_exp() + unbiased_exp(ua) + unbiased_exp(ub);
  return round_to_format(product.with_lsb_exp(lsb), fmt, mode);
}

inline RnFloat fmul(const RnFloat& a, const RnFloat& b, RoundingMode mode = RoundingMode::nearest) {
  return fmul_with_sticky(a, b, mode).value;
}

namespace detail {

/// |significand| scaled into [1, 2) with p-1 fraction bits, and its exponent.
inline std::pair<RnFixed, int> normalized_magnitude(const UnpackedFloat& u) {
  const int p = u.format.precision;
  const int fb = u.format.fraction_bits();
  RnFixed m = u.significand.with_width(p + 1);
  if (m.sign_bit()) m = negate(m);
  int e = unbiased_exp(u);
  while (m.bits() < (Word(1) << fb)) {
    m = shift_left(m, 1).with_width(p + 1);
    --e;
  }
  return {m, e};
}

}  // namespace detail

/// Quotient of the encoded values: signs are split off, both magnitudes are
/// normalized into [1, 2), the fixed-point divider develops two bits beyond
/// the target, and the remainder feeds the sticky tail.
inline Rounded fdiv_with_sticky(const RnFloat& a, const RnFloat& b, RoundingMode mode = RoundingMode::nearest) {
  if (!(a.format == b.format)) throw contract_error("fdiv: operands use different formats");
  const FloatFormat fmt = a.format;
  const FloatClass ca = classify(a), cb = classify(b);
  if (ca == FloatClass::nan || cb == FloatClass::nan) return {canonical_nan(fmt), {}};
  const bool za = is_zero_value(a), zb = is_zero_value(b);
  const bool ia = ca == FloatClass::infinity, ib = cb == FloatClass::infinity;
  // a zero operand counts as +0 for the sign of the result
  const bool sign = (!za && a.sign_bit()) != (!zb && b.sign_bit());
  if (ia && ib) return {canonical_nan(fmt), {}};
  if (ia) return {infinity(fmt, sign), {}};
  if (ib) return {positive_zero(fmt), {}};
  if (zb) return {za ? canonical_nan(fmt) : infinity(fmt, sign), {}};
  if (za) return {positive_zero(fmt), {}};

  const auto [x, ex] = detail::normalized_magnitude(unpack(a));
  const auto [y, ey] = detail::normalized_magnitude(unpack(b));
  const DivResult q = div(x, y, fmt.fraction_bits(), DivForm::value);
  RnFixed approx = q.approx.with_lsb_exp(q.approx.lsb_exp() + ex - ey);
  if (sign) approx = negate(approx);
  return round_to_format(approx, fmt, mode, q.approx_below);
}

inline RnFloat fdiv(const RnFloat& a, const RnFloat& b, RoundingMode mode = RoundingMode::nearest) {
  return fdiv_with_sticky(a, b, mode).value;
}

inline const char* to_string(RoundingMode m) {
  switch (m) {
    case RoundingMode::nearest: return "rn";
    case RoundingMode::toward_plus_inf: return "ru";
    case RoundingMode::toward_minus_inf: return "rd";
    case RoundingMode::toward_zero: return "rz";
    case RoundingMode::away_from_zero: return "ra";
  }
  return "?";
}

inline std::optional<RoundingMode> parse_rounding_mode(std::string_view s) {
  if (s == "rn" || s == "nearest") return RoundingMode::nearest;
  if (s == "ru") return RoundingMode::toward_plus_inf;
  if (s == "rd") return RoundingMode::toward_minus_inf;
  if (s == "rz") return RoundingMode::toward_zero;
  if (s == "ra") return RoundingMode::away_from_zero;
  return std::nullopt;
}

}  // namespace rnarith
