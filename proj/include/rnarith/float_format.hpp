// Packed RN floating point: | sign | biased exponent | fraction | round |.
//
// A normal significand is the (p+1)-bit 2's complement word s s' f1..f(p-1)
// whose second bit s' is the complement of the sign and is not stored. The
// round bit continues the significand, so the value is
//   2^(e-bias) * ([s s'. f1..f(p-1)]_2c + r * 2^-(p-1)).
// Subnormals (e == 0) use the p-bit word s . f1..f(p-1) at exponent 1-bias,
// so negative subnormals carry leading ones.
#pragma once

#include "rnarith/rn_fixed.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rnarith {

struct FloatFormat {
  int exp_bits;
  int precision;  ///< p: the fraction field holds p-1 bits

  constexpr int fraction_bits() const { return precision - 1; }
  constexpr int total_bits() const { return 1 + exp_bits + fraction_bits() + 1; }
  constexpr int bias() const { return (1 << (exp_bits - 1)) - 1; }
  constexpr int max_biased_exp() const { return (1 << exp_bits) - 1; }
  constexpr int emin() const { return 1 - bias(); }
  constexpr int emax() const { return max_biased_exp() - 1 - bias(); }
  constexpr std::uint64_t word_mask() const {
    return total_bits() >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << total_bits()) - 1;
  }
  std::string name() const { return "rnf" + std::to_string(total_bits()); }

  friend constexpr bool operator==(const FloatFormat&, const FloatFormat&) = default;
};

inline constexpr FloatFormat rnf8{3, 4};
inline constexpr FloatFormat rnf16{5, 10};
inline constexpr FloatFormat rnf32{8, 23};
inline constexpr FloatFormat rnf64{11, 52};

inline std::optional<FloatFormat> format_by_bits(int bits) {
  switch (bits) {
    case 8: return rnf8;
    case 16: return rnf16;
    case 32: return rnf32;
    case 64: return rnf64;
    default: return std::nullopt;
  }
}

inline std::optional<FloatFormat> format_by_name(std::string_view name) {
  if (!name.starts_with("rnf")) return std::nullopt;
  const std::string digits(name.substr(3));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3)
    return std::nullopt;
  return format_by_bits(std::stoi(digits));
}

struct RnFloat {
  FloatFormat format;
  std::uint64_t word;

  RnFloat(FloatFormat f, std::uint64_t w) : format(f), word(w) {
    if ((w & ~f.word_mask()) != 0) throw contract_error("RnFloat: word wider than its format");
  }

  bool sign_bit() const { return (word >> (format.total_bits() - 1)) & 1; }
  int biased_exp() const {
    return static_cast<int>((word >> (format.fraction_bits() + 1)) & std::uint64_t(format.max_biased_exp()));
  }
  std::uint64_t fraction() const { return (word >> 1) & ((std::uint64_t(1) << format.fraction_bits()) - 1); }
  bool round_bit() const { return word & 1; }

  friend bool operator==(const RnFloat&, const RnFloat&) = default;
};

enum class FloatClass { zero, subnormal, normal, infinity, nan };

inline const char* to_string(FloatClass c) {
  switch (c) {
    case FloatClass::zero: return "zero";
    case FloatClass::subnormal: return "subnormal";
    case FloatClass::normal: return "normal";
    case FloatClass::infinity: return "infinity";
    case FloatClass::nan: return "nan";
  }
  return "?";
}

/// The fields of a word with the hidden bit made explicit. For normals the
/// significand is the (p+1)-bit word; for every other class it is the p-bit
/// word s.f. The significand's lsb_exp is -(p-1): scale by 2^(biased-bias),
/// or 2^(1-bias) for subnormals, to get the value.
struct UnpackedFloat {
  FloatFormat format;
  FloatClass cls;
  bool sign;
  int biased_exp;
  RnFixed significand;

  friend bool operator==(const UnpackedFloat&, const UnpackedFloat&) = default;
};

inline UnpackedFloat unpack(const RnFloat& f) {
  const FloatFormat fmt = f.format;
  const int p = fmt.precision;
  const int fb = fmt.fraction_bits();
  const bool s = f.sign_bit();
  const int e = f.biased_exp();
  const Word frac = static_cast<Word>(f.fraction());
  const bool r = f.round_bit();

  // s . f as a p-bit 2's complement word
  const Word short_word = (s ? -(Word(1) << fb) : Word(0)) | frac;
  const RnFixed short_sig(short_word, p, -fb, r);

  FloatClass cls;
  if (e == 0) {
    cls = (!s && frac == 0 && !r) ? FloatClass::zero : FloatClass::subnormal;
  } else if (e == fmt.max_biased_exp()) {
    cls = (frac == 0 && !r) ? FloatClass::infinity : FloatClass::nan;
  } else {
    // s s' . f with s' = !s
    const Word hidden = s ? Word(0) : (Word(1) << fb);
    const Word long_word = (s ? -(Word(1) << p) : Word(0)) | hidden | frac;
    return {fmt, FloatClass::normal, s, e, RnFixed(long_word, p + 1, -fb, r)};
  }
  return {fmt, cls, s, e, short_sig};
}

inline RnFloat pack(const UnpackedFloat& u) {
  const FloatFormat fmt = u.format;
  const int p = fmt.precision;
  const int fb = fmt.fraction_bits();
  const RnFixed& sig = u.significand;
  if (sig.lsb_exp() != -fb) throw contract_error("pack: significand LSB must have weight 2^-(p-1)");
  if (sig.sign_bit() != u.sign) throw contract_error("pack: sign field disagrees with the significand");

  int e = u.biased_exp;
  switch (u.cls) {
    case FloatClass::normal:
      if (e < 1 || e >= fmt.max_biased_exp()) throw contract_error("pack: normal exponent out of range");
      if (!detail::fits_width(sig.bits(), p + 1) || sig.bit(p - 1) == sig.bit(p))
        throw contract_error("pack: significand is not normalized");
      break;
    case FloatClass::zero:
      if (sig.bits() != 0 || sig.round() || e != 0) throw contract_error("pack: malformed zero");
      break;
    case FloatClass::subnormal:
      if (e != 0 || !detail::fits_width(sig.bits(), p)) throw contract_error("pack: malformed subnormal");
      if (sig.bits() == 0 && !sig.round()) throw contract_error("pack: subnormal pattern is +0");
      break;
    case FloatClass::infinity:
      if (e != fmt.max_biased_exp() || (sig.bits() & detail::low_mask(fb)) != 0 || sig.round())
        throw contract_error("pack: malformed infinity");
      break;
    case FloatClass::nan:
      if (e != fmt.max_biased_exp() || ((sig.bits() & detail::low_mask(fb)) == 0 && !sig.round()))
        throw contract_error("pack: malformed nan");
      break;
  }
  const std::uint64_t frac = static_cast<std::uint64_t>(sig.bits() & detail::low_mask(fb));
  std::uint64_t w = (std::uint64_t(u.sign) << (fmt.total_bits() - 1)) | (std::uint64_t(e) << (fb + 1)) |
                    (frac << 1) | std::uint64_t(sig.round());
  return {fmt, w};
}

inline FloatClass classify(const RnFloat& f) { return unpack(f).cls; }

/// Exponent of the significand's unit position, i.e. the binade exponent E.
inline int unbiased_exp(const UnpackedFloat& u) {
  return u.cls == FloatClass::normal ? u.biased_exp - u.format.bias() : u.format.emin();
}

/// The exact value as an RnFixed whose lsb_exp is absolute.
inline RnFixed scaled_significand(const UnpackedFloat& u) {
  return u.significand.with_lsb_exp(unbiased_exp(u) - u.format.fraction_bits());
}

struct FloatValue {
  enum class Kind { finite, pos_inf, neg_inf, nan };
  Kind kind;
  DyadicRational value;  ///< meaningful when finite

  bool is_finite() const { return kind == Kind::finite; }
  friend bool operator==(const FloatValue&, const FloatValue&) = default;
};

inline FloatValue value_of_float(const RnFloat& f) {
  const UnpackedFloat u = unpack(f);
  switch (u.cls) {
    case FloatClass::nan: return {FloatValue::Kind::nan, {}};
    case FloatClass::infinity: return {u.sign ? FloatValue::Kind::neg_inf : FloatValue::Kind::pos_inf, {}};
    case FloatClass::zero: return {FloatValue::Kind::finite, {}};
    default: return {FloatValue::Kind::finite, value_of(scaled_significand(u))};
  }
}

inline bool is_zero_value(const RnFloat& f) {
  const FloatValue v = value_of_float(f);
  return v.is_finite() && v.value.is_zero();
}

inline RnFloat positive_zero(FloatFormat fmt) { return {fmt, 0}; }

inline RnFloat infinity(FloatFormat fmt, bool negative) {
  return {fmt, (std::uint64_t(negative) << (fmt.total_bits() - 1)) |
                   (std::uint64_t(fmt.max_biased_exp()) << (fmt.fraction_bits() + 1))};
}

/// Quiet NaN: top fraction bit set, round bit clear.
inline RnFloat canonical_nan(FloatFormat fmt) {
  return {fmt, (std::uint64_t(fmt.max_biased_exp()) << (fmt.fraction_bits() + 1)) |
                   (std::uint64_t(1) << fmt.fraction_bits())};
}

/// Inverts sign, fraction and round bits of finite values; zero-valued
/// results come back as +0, infinities swap sign, NaN is returned as is.
inline RnFloat float_negate(const RnFloat& f) {
  const FloatFormat fmt = f.format;
  switch (classify(f)) {
    case FloatClass::nan: return f;
    case FloatClass::infinity: return infinity(fmt, !f.sign_bit());
    case FloatClass::zero: return positive_zero(fmt);
    default: break;
  }
  if (is_zero_value(f)) return positive_zero(fmt);
  const std::uint64_t exp_field = std::uint64_t(fmt.max_biased_exp()) << (fmt.fraction_bits() + 1);
  return {fmt, (f.word ^ fmt.word_mask() ^ exp_field)};
}

// ---------------------------------------------------------------------------
// Text forms:  rnf<bits>:0x<hex>   and   s=<b> e=<biased> f=<binary> r=<b>

inline std::string to_hex_literal(const RnFloat& f) {
  static constexpr char kHex[] = "0123456789abcdef";
  const int digits = (f.format.total_bits() + 3) / 4;
  std::string s(static_cast<std::size_t>(digits), '0');
  for (int i = 0; i < digits; ++i) s[static_cast<std::size_t>(digits - 1 - i)] = kHex[(f.word >> (4 * i)) & 0xf];
  return f.format.name() + ":0x" + s;
}

inline RnFloat parse_hex_literal(std::string_view text) {
  const auto fail = [&](std::string_view what) {
    return parse_error("bad float literal '" + std::string(text) + "': " + std::string(what));
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw fail("missing ':'");
  const auto fmt = format_by_name(text.substr(0, colon));
  if (!fmt) throw fail("unknown format");
  std::string_view hex = text.substr(colon + 1);
  if (!(hex.starts_with("0x") || hex.starts_with("0X")) || hex.size() < 3) throw fail("expected 0x<hex>");
  hex.remove_prefix(2);
  if (hex.size() > 16) throw fail("too many hex digits");
  std::uint64_t w = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw fail("bad hex digit");
    w = (w << 4) | std::uint64_t(d);
  }
  if ((w & ~fmt->word_mask()) != 0) throw fail("word does not fit the format");
  return {*fmt, w};
}

inline std::string fraction_string(const RnFloat& f) {
  std::string s;
  for (int i = f.format.fraction_bits() - 1; i >= 0; --i) s += ((f.fraction() >> i) & 1) ? '1' : '0';
  return s;
}

inline std::string to_fields_string(const RnFloat& f) {
  return "s=" + std::to_string(int(f.sign_bit())) + " e=" + std::to_string(f.biased_exp()) +
         " f=" + fraction_string(f) + " r=" + std::to_string(int(f.round_bit()));
}

inline RnFloat parse_fields(FloatFormat fmt, std::string_view text) {
  const auto fail = [&](std::string_view what) {
    return parse_error("bad field list '" + std::string(text) + "': " + std::string(what));
  };
  std::optional<std::uint64_t> s, e, fr, r;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    const auto end = std::min(text.find(' ', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    pos = end;
    if (item.size() < 3 || item[1] != '=') throw fail("expected key=value");
    const std::string_view v = item.substr(2);
    std::uint64_t n = 0;
    const bool binary = item[0] != 'e';
    for (char c : v) {
      if (binary ? (c != '0' && c != '1') : (c < '0' || c > '9')) throw fail("bad digit in " + std::string(item));
      n = binary ? (n << 1) | std::uint64_t(c - '0') : n * 10 + std::uint64_t(c - '0');
    }
    switch (item[0]) {
      case 's': if (v.size() != 1) throw fail("s takes one bit"); s = n; break;
      case 'e': e = n; break;
      case 'f':
        if (static_cast<int>(v.size()) != fmt.fraction_bits()) throw fail("f must have p-1 bits");
        fr = n;
        break;
      case 'r': if (v.size() != 1) throw fail("r takes one bit"); r = n; break;
      default: throw fail("unknown key");
    }
  }
  if (!s || !e || !fr || !r) throw fail("need s, e, f and r");
  if (*e > std::uint64_t(fmt.max_biased_exp())) throw fail("exponent field overflow");
  return {fmt, (*s << (fmt.total_bits() - 1)) | (*e << (fmt.fraction_bits() + 1)) | (*fr << 1) | *r};
}

}  // namespace rnarith
