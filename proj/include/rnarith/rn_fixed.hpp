// Canonical RN-encoding of fixed-point values: a 2's complement word with an
// appended round bit, valued (bits + round) * 2^lsb_exp.
#pragma once

#include "rnarith/dyadic.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rnarith {

using Word = __int128;

/// Widest word an RnFixed can carry.
inline constexpr int kMaxWidth = 127;

namespace detail {

inline bool fits_width(Word v, int width) {
  if (width >= 128) return true;
  const Word lim = Word(1) << (width - 1);
  return v >= -lim && v < lim;
}

/// Bit i of the infinite sign extension of v.
inline bool bit_at(Word v, int i) {
  if (i >= 127) return v < 0;
  return ((v >> i) & 1) != 0;
}

/// Number of bits needed to write a nonnegative value, 0 for 0.
inline int bit_length(Word v) {
  int n = 0;
  while (v > 0) {
    v >>= 1;
    ++n;
  }
  return n;
}

/// Smallest 2's complement width holding v.
inline int min_width(Word v) { return (v < 0 ? bit_length(~v) : bit_length(v)) + 1; }

inline Word low_mask(int k) { return k >= 127 ? ~Word(0) : (Word(1) << k) - 1; }

}  // namespace detail

class RnFixed {
 public:
  RnFixed(Word bits, int width, int lsb_exp, bool round)
      : bits_(bits), width_(width), lsb_exp_(lsb_exp), round_(round) {
    if (width < 1 || width > kMaxWidth) throw contract_error("RnFixed: width out of range");
    if (!detail::fits_width(bits, width)) throw contract_error("RnFixed: word does not fit its width");
  }

  static RnFixed zero(int width, int lsb_exp) { return {0, width, lsb_exp, false}; }

  /// Smallest-width encoding of the given word.
  static RnFixed compact(Word bits, int lsb_exp, bool round) {
    return {bits, detail::min_width(bits), lsb_exp, round};
  }

  Word bits() const { return bits_; }
  int width() const { return width_; }
  int lsb_exp() const { return lsb_exp_; }
  bool round() const { return round_; }
  bool sign_bit() const { return bits_ < 0; }
  bool bit(int i) const { return detail::bit_at(bits_, i); }

  /// Same word sign-extended (or narrowed, when the value still fits).
  RnFixed with_width(int width) const { return {bits_, width, lsb_exp_, round_}; }
  /// Same word and round bit read at another weight.
  RnFixed with_lsb_exp(int lsb_exp) const { return {bits_, width_, lsb_exp, round_}; }
  RnFixed with_round(bool round) const { return {bits_, width_, lsb_exp_, round}; }

  std::string word_string() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i)
      if (bit(i)) s[static_cast<std::size_t>(width_ - 1 - i)] = '1';
    return s;
  }

  friend bool operator==(const RnFixed&, const RnFixed&) = default;

 private:
  Word bits_;
  int width_;
  int lsb_exp_;
  bool round_;
};

/// Digits over {-1,0,1}, most significant first; the last digit has weight 2^lsb_exp.
struct SignedDigitString {
  std::vector<int> digits;
  int lsb_exp = 0;

  DyadicRational value() const {
    BigInt acc = 0;
    for (int d : digits) acc = acc * 2 + d;
    return {acc, lsb_exp};
  }

  friend bool operator==(const SignedDigitString&, const SignedDigitString&) = default;
};

enum class TailSign { rounded_up, rounded_down };

struct FixedRange {
  RnFixed min;
  RnFixed max;
};

// ---------------------------------------------------------------------------

inline DyadicRational value_of(const RnFixed& x) {
  return {to_bigint(x.bits()) + (x.round() ? 1 : 0), x.lsb_exp()};
}

/// Valid RN string: digits in {-1,0,1} and nonzero digits alternate in sign.
inline bool validate_rn(const SignedDigitString& sd) {
  int last = 0;
  for (int d : sd.digits) {
    if (d < -1 || d > 1) return false;
    if (d == 0) continue;
    if (d == last) return false;
    last = d;
  }
  return true;
}

/// Booth recoding delta_i = b_{i-1} - b_i, with b_{lsb-1} = 0.
inline SignedDigitString booth_recode(Word word, int width, int lsb_exp) {
  if (width < 1 || width > kMaxWidth) throw contract_error("booth_recode: width out of range");
  if (!detail::fits_width(word, width)) throw contract_error("booth_recode: word does not fit width");
  SignedDigitString sd;
  sd.lsb_exp = lsb_exp;
  sd.digits.reserve(static_cast<std::size_t>(width));
  for (int i = width - 1; i >= 0; --i) {
    const int lower = i == 0 ? 0 : int(detail::bit_at(word, i - 1));
    sd.digits.push_back(lower - int(detail::bit_at(word, i)));
  }
  return sd;
}

/// Signed-digit view of a canonical encoding: pairs (b_{i-1}, b_i) above the
/// LSB and (round, b_lsb) at it.
inline SignedDigitString sd_of_canonical(const RnFixed& x) {
  SignedDigitString sd;
  sd.lsb_exp = x.lsb_exp();
  sd.digits.reserve(static_cast<std::size_t>(x.width()));
  for (int i = x.width() - 1; i >= 0; --i) {
    const int lower = i == 0 ? int(x.round()) : int(x.bit(i - 1));
    sd.digits.push_back(lower - int(x.bit(i)));
  }
  return sd;
}

/// Inverse of sd_of_canonical. The top bit is 1 exactly when the leading
/// nonzero digit is -1; lower bits follow from b_{i-1} = b_i + d_i.
inline RnFixed canonical_of_sd(const SignedDigitString& sd) {
  if (sd.digits.empty()) throw contract_error("canonical_of_sd: empty digit string");
  if (!validate_rn(sd)) throw contract_error("canonical_of_sd: digits are not an RN-representation");
  const int width = static_cast<int>(sd.digits.size());
  if (width > kMaxWidth) throw contract_error("canonical_of_sd: too many digits");

  const auto lead = std::find_if(sd.digits.begin(), sd.digits.end(), [](int d) { return d != 0; });
  int b = (lead != sd.digits.end() && *lead < 0) ? 1 : 0;
  Word bits = b ? Word(-1) : Word(0);  // top bit and its sign extension
  bool round = false;
  for (int i = width - 1; i >= 0; --i) {
    const int lower = b + sd.digits[static_cast<std::size_t>(width - 1 - i)];
    if (lower < 0 || lower > 1) throw contract_error("canonical_of_sd: digit string has no canonical encoding");
    if (i == 0) {
      round = lower == 1;
      break;
    }
    const Word m = Word(1) << (i - 1);
    bits = lower ? (bits | m) : (bits & ~m);
    b = lower;
  }
  return {bits, width, sd.lsb_exp, round};
}

/// Rounds to nearest by dropping every position below k; the first dropped
/// bit becomes the round bit. Width shrinks accordingly, never below one bit.
inline RnFixed truncate_at(const RnFixed& x, int k) {
  if (k < x.lsb_exp()) throw contract_error("truncate_at: target position below the LSB");
  const int d = k - x.lsb_exp();
  if (d == 0) return x;
  const int width = std::max(1, x.width() - d);
  const Word bits = d >= 127 ? (x.bits() < 0 ? Word(-1) : Word(0)) : (x.bits() >> d);
  return {bits, width, k, x.bit(d - 1)};
}

/// Constant-time negation: complement the word and the round bit.
inline RnFixed negate(const RnFixed& x) { return {~x.bits(), x.width(), x.lsb_exp(), !x.round()}; }

/// [a + r*u/2 ; a + (1+r)*u/2] with a = bits * u.
inline DyadicInterval interval_of(const RnFixed& x) {
  const BigInt twice_a = to_bigint(x.bits()) * 2;
  const int r = x.round() ? 1 : 0;
  return {DyadicRational(twice_a + r, x.lsb_exp() - 1), DyadicRational(twice_a + 1 + r, x.lsb_exp() - 1)};
}

/// Direction of a possible earlier rounding, read off the round bit.
inline TailSign tail_digit_sign(const RnFixed& x) {
  if (value_of(x).is_zero()) throw contract_error("tail_digit_sign: zero has no nonzero digit");
  return x.round() ? TailSign::rounded_up : TailSign::rounded_down;
}

/// Extremes of width-w encodings at unit weight: (011..1, 1) and (100..0, 0).
inline FixedRange range_of(int width) {
  if (width < 2 || width > kMaxWidth) throw contract_error("range_of: width out of range");
  const Word top = Word(1) << (width - 1);
  return {RnFixed(-top, width, 0, false), RnFixed(top - 1, width, 0, true)};
}

// ---------------------------------------------------------------------------
// Literal form  rn:<word>:r<0|1>@<lsb_exp>

inline std::string to_literal(const RnFixed& x) {
  return "rn:" + x.word_string() + ":r" + (x.round() ? "1" : "0") + "@" + std::to_string(x.lsb_exp());
}

inline RnFixed parse_rn_literal(std::string_view text) {
  const auto fail = [&](std::string_view what) {
    return parse_error("bad rn literal '" + std::string(text) + "': " + std::string(what));
  };
  if (!text.starts_with("rn:")) throw fail("missing 'rn:' prefix");
  std::string_view rest = text.substr(3);
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw fail("missing ':r' field");
  const std::string_view word = rest.substr(0, colon);
  rest = rest.substr(colon + 1);
  if (word.empty() || static_cast<int>(word.size()) > kMaxWidth) throw fail("word length");
  if (rest.size() < 4 || rest[0] != 'r' || (rest[1] != '0' && rest[1] != '1') || rest[2] != '@')
    throw fail("round field must be r0 or r1 followed by '@'");
  const bool round = rest[1] == '1';
  const std::string_view exp_text = rest.substr(3);
  int lsb_exp = 0;
  const auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), lsb_exp);
  if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) throw fail("lsb exponent");

  Word bits = 0;
  for (char c : word) {
    if (c != '0' && c != '1') throw fail("word must be binary");
    bits = (bits << 1) | (c == '1' ? 1 : 0);
  }
  const int width = static_cast<int>(word.size());
  if (word[0] == '1') bits -= (width >= 128 ? Word(0) : (Word(1) << width));  // sign-extend
  return {bits, width, lsb_exp, round};
}

inline std::string to_string(const SignedDigitString& sd) {
  std::string s;
  for (std::size_t i = 0; i < sd.digits.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(sd.digits[i]);
  }
  return s;
}

}  // namespace rnarith
