// Exact reference arithmetic for the test suites. Everything here is built
// from Boost rationals and plain integers; encodings are decoded straight from
// their bit fields, so nothing routes through the code under test.
#pragma once

#include "rnarith/dyadic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rnarith::oracle {

using ExactRational = boost::multiprecision::cpp_rational;

enum class Op { add, sub, mul, div };

inline const char* to_string(Op op) {
  switch (op) {
    case Op::add: return "add";
    case Op::sub: return "sub";
    case Op::mul: return "mul";
    case Op::div: return "div";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Exact values

inline ExactRational pow2(int e) {
  BigInt one = 1;
  if (e >= 0) return ExactRational(BigInt(one << e));
  return ExactRational(one, BigInt(one << -e));
}

inline ExactRational exact_eval(Op op, const ExactRational& a, const ExactRational& b) {
  switch (op) {
    case Op::add: return a + b;
    case Op::sub: return a - b;
    case Op::mul: return a * b;
    case Op::div:
      if (b == 0) throw std::domain_error("exact_eval: division by zero");
      return a / b;
  }
  throw std::invalid_argument("exact_eval: unknown op");
}

inline ExactRational to_rational(const DyadicRational& d) { return ExactRational(d.mantissa()) * pow2(d.exp()); }

/// The dyadic value of x, if its denominator is a power of two.
inline std::optional<DyadicRational> to_dyadic(const ExactRational& x) {
  const BigInt den = boost::multiprecision::denominator(x);
  const unsigned tz = boost::multiprecision::lsb(den);
  if (den != (BigInt(1) << tz)) return std::nullopt;
  return DyadicRational(boost::multiprecision::numerator(x), -static_cast<int>(tz));
}

inline std::string to_string(const ExactRational& x) {
  if (auto d = to_dyadic(x)) return d->to_decimal();
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

/// floor(x * 2^-k)
inline BigInt floor_on_grid(const ExactRational& x, int k) {
  const ExactRational s = x * pow2(-k);
  const BigInt n = boost::multiprecision::numerator(s);
  const BigInt d = boost::multiprecision::denominator(s);
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

/// Nearest multiples of 2^k. A tie yields both neighbours, lower first.
inline std::vector<DyadicRational> reference_round_nearest(const ExactRational& x, int k) {
  const BigInt lo = floor_on_grid(x, k);
  const ExactRational below = ExactRational(lo) * pow2(k);
  if (below == x) return {DyadicRational(lo, k)};
  const ExactRational above = below + pow2(k);
  const ExactRational dl = x - below, du = above - x;
  if (dl < du) return {DyadicRational(lo, k)};
  if (du < dl) return {DyadicRational(lo + 1, k)};
  return {DyadicRational(lo, k), DyadicRational(lo + 1, k)};
}

/// floor(log2 |x|) for nonzero x.
inline int binade(const ExactRational& x) {
  if (x == 0) throw std::domain_error("binade: zero");
  const ExactRational m = boost::multiprecision::abs(x);
  const BigInt n = boost::multiprecision::numerator(m);
  const BigInt d = boost::multiprecision::denominator(m);
  int e = static_cast<int>(boost::multiprecision::msb(n)) - static_cast<int>(boost::multiprecision::msb(d));
  if (m < pow2(e)) --e;
  else if (m >= pow2(e + 1)) ++e;
  return e;
}

// ---------------------------------------------------------------------------
// Intervals

struct RationalInterval {
  ExactRational lo;
  ExactRational hi;

  bool contains(const ExactRational& x) const { return lo <= x && x <= hi; }
  bool strictly_contains(const ExactRational& x) const { return lo < x && x < hi; }
  bool subset_of(const RationalInterval& o) const { return o.lo <= lo && hi <= o.hi; }
  std::string to_string() const { return "[" + oracle::to_string(lo) + " ; " + oracle::to_string(hi) + "]"; }
};

enum class InclusionOp { add, mul_nonneg, div_normalized };

/// Image of two operand intervals. Multiplication and division assume
/// nonnegative, respectively positive, operands.
inline RationalInterval interval_image(const RationalInterval& a, const RationalInterval& b, InclusionOp op) {
  switch (op) {
    case InclusionOp::add: return {a.lo + b.lo, a.hi + b.hi};
    case InclusionOp::mul_nonneg:
      if (a.lo < 0 || b.lo < 0) throw std::domain_error("interval_image: negative operand for mul_nonneg");
      return {a.lo * b.lo, a.hi * b.hi};
    case InclusionOp::div_normalized:
      if (a.lo <= 0 || b.lo <= 0) throw std::domain_error("interval_image: nonpositive operand for division");
      return {a.lo / b.hi, a.hi / b.lo};
  }
  throw std::invalid_argument("interval_image: unknown op");
}

inline bool check_inclusion(const RationalInterval& result, const RationalInterval& a, const RationalInterval& b,
                            InclusionOp op) {
  return result.subset_of(interval_image(a, b, op));
}

// ---------------------------------------------------------------------------
// Fixed-point words, decoded from raw fields

struct FixedWord {
  std::int64_t bits;  // already sign-extended
  int width;
  int lsb;
  bool round;

  friend bool operator==(const FixedWord&, const FixedWord&) = default;

  std::string to_string() const {
    std::string s;
    for (int i = width - 1; i >= 0; --i) s += ((bits >> i) & 1) ? '1' : '0';
    return s + ":r" + (round ? "1" : "0") + "@" + std::to_string(lsb);
  }
};

/// (bits + round) * 2^lsb
inline ExactRational fixed_value(const FixedWord& w) { return ExactRational(BigInt(w.bits) + (w.round ? 1 : 0)) * pow2(w.lsb); }

/// [a + r*u/2 ; a + (1+r)*u/2]
inline RationalInterval fixed_interval(const FixedWord& w) {
  const ExactRational a = ExactRational(BigInt(w.bits)) * pow2(w.lsb);
  const ExactRational half = pow2(w.lsb - 1);
  const int r = w.round ? 1 : 0;
  return {a + half * r, a + half * (1 + r)};
}

/// Value and interval ends counted in units of 2^(lsb-1). Cheap exact
/// arithmetic for sweeps where every word shares one LSB weight.
struct HalfUnits {
  BigInt value;
  BigInt lo;
  BigInt hi;
};

inline HalfUnits fixed_half_units(const FixedWord& w) {
  const BigInt a2 = 2 * BigInt(w.bits);
  const int r = w.round ? 1 : 0;
  return {a2 + 2 * r, a2 + r, a2 + 1 + r};
}

inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t(1) << 26;

inline void guard_size(std::uint64_t n, const char* what) {
  if (n > kEnumerationLimit) throw std::length_error(std::string(what) + ": space exceeds 2^26 elements");
}

inline std::uint64_t fixed_space_size(int width) {
  if (width < 1 || width > 40) throw std::length_error("fixed_space_size: width out of range");
  return std::uint64_t(1) << (width + 1);
}

/// Index i holds word i >> 1 (read as 2's complement) with round bit i & 1.
inline FixedWord fixed_at(int width, std::uint64_t index, int lsb = 0) {
  const std::uint64_t raw = index >> 1;
  const std::int64_t top = std::int64_t(1) << (width - 1);
  const auto v = static_cast<std::int64_t>(raw);
  return {v >= top ? v - 2 * top : v, width, lsb, (index & 1) != 0};
}

inline std::vector<FixedWord> enumerate_fixed(int width, int lsb = 0) {
  const std::uint64_t n = fixed_space_size(width);
  guard_size(n, "enumerate_fixed");
  std::vector<FixedWord> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(fixed_at(width, i, lsb));
  return out;
}

/// Normalized division operands: 1 <= x < 2 with p fraction bits, both round bits.
inline std::uint64_t div_operand_count(int p) { return std::uint64_t(1) << (p + 1); }

inline FixedWord div_operand_at(int p, std::uint64_t index) {
  return {std::int64_t(1 << p) + static_cast<std::int64_t>(index >> 1), p + 2, -p, (index & 1) != 0};
}

inline std::vector<std::array<FixedWord, 2>> enumerate_div_pairs(int p) {
  if (p < 1 || p > 12) throw std::length_error("enumerate_div_pairs: p out of range");
  const std::uint64_t m = div_operand_count(p);
  guard_size(m * m, "enumerate_div_pairs");
  std::vector<std::array<FixedWord, 2>> out;
  out.reserve(m * m);
  for (std::uint64_t i = 0; i < m; ++i)
    for (std::uint64_t j = 0; j < m; ++j) out.push_back({div_operand_at(p, i), div_operand_at(p, j)});
  return out;
}

/// Bounds any acceptable approximate quotient must lie strictly inside.
inline RationalInterval div_bounds(const FixedWord& x, const FixedWord& y) {
  const RationalInterval ix = fixed_interval(x), iy = fixed_interval(y);
  return {ix.lo / iy.hi, ix.hi / iy.lo};
}

/// The quotient of the bit strings with their round bits appended.
inline ExactRational div_midpoint_quotient(const FixedWord& x, const FixedWord& y) {
  const auto ext = [](const FixedWord& w) { return ExactRational(2 * BigInt(w.bits) + (w.round ? 1 : 0)) * pow2(w.lsb - 1); };
  return ext(x) / ext(y);
}

// ---------------------------------------------------------------------------
// Floating-point words, decoded from raw fields

struct FloatLayout {
  int exp_bits;
  int precision;

  int fraction_bits() const { return precision - 1; }
  int total_bits() const { return 1 + exp_bits + fraction_bits() + 1; }
  int bias() const { return (1 << (exp_bits - 1)) - 1; }
  int emin() const { return 1 - bias(); }
  int emax() const { return (1 << exp_bits) - 2 - bias(); }
};

struct FloatRef {
  enum class Kind { finite, pos_inf, neg_inf, nan };
  Kind kind = Kind::finite;
  ExactRational value;

  bool finite() const { return kind == Kind::finite; }
};

inline FloatRef float_value(const FloatLayout& f, std::uint64_t word) {
  const int fb = f.fraction_bits();
  const bool r = word & 1;
  const std::uint64_t frac = (word >> 1) & ((std::uint64_t(1) << fb) - 1);
  const std::uint64_t e = (word >> (fb + 1)) & ((std::uint64_t(1) << f.exp_bits) - 1);
  const bool s = (word >> (f.total_bits() - 1)) & 1;
  const std::uint64_t all_ones = (std::uint64_t(1) << f.exp_bits) - 1;

  if (e == all_ones) {
    if (frac == 0 && !r) return {s ? FloatRef::Kind::neg_inf : FloatRef::Kind::pos_inf, 0};
    return {FloatRef::Kind::nan, 0};
  }
  const BigInt fr = BigInt(frac);
  if (e == 0) {
    // s f read as a p-bit 2's complement integer at the smallest exponent
    const BigInt sig = fr - (s ? BigInt(1) << fb : BigInt(0));
    return {FloatRef::Kind::finite, ExactRational(sig + (r ? 1 : 0)) * pow2(f.emin() - fb)};
  }
  // s, not s, f as a (p+1)-bit 2's complement integer
  const BigInt sig = s ? BigInt(fr - (BigInt(1) << f.precision)) : BigInt(fr + (BigInt(1) << fb));
  const int E = static_cast<int>(e) - f.bias();
  return {FloatRef::Kind::finite, ExactRational(sig + (r ? 1 : 0)) * pow2(E - fb)};
}

/// Weight of the last fraction position of a finite word.
inline int float_word_unit(const FloatLayout& f, std::uint64_t word) {
  const std::uint64_t e = (word >> (f.fraction_bits() + 1)) & ((std::uint64_t(1) << f.exp_bits) - 1);
  const int E = e == 0 ? f.emin() : static_cast<int>(e) - f.bias();
  return E - f.fraction_bits();
}

/// Interval of a finite word: [v - r*u/2 ; v + (1-r)*u/2].
inline RationalInterval float_interval(const FloatLayout& f, std::uint64_t word) {
  const FloatRef v = float_value(f, word);
  if (!v.finite()) throw std::domain_error("float_interval: word is not finite");
  const ExactRational half = pow2(float_word_unit(f, word) - 1);
  const int r = int(word & 1);
  return {v.value - half * r, v.value + half * (1 - r)};
}

inline std::uint64_t float_space_size(const FloatLayout& f) {
  if (f.total_bits() > 26) throw std::length_error("enumerate_float: space exceeds 2^26 elements");
  return std::uint64_t(1) << f.total_bits();
}

inline std::vector<std::uint64_t> enumerate_float(const FloatLayout& f) {
  const std::uint64_t n = float_space_size(f);
  std::vector<std::uint64_t> out(n);
  for (std::uint64_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

inline ExactRational largest_finite(const FloatLayout& f) { return pow2(f.emax() + 1); }

/// Spacing of the representable values around x (x itself for zero: the
/// subnormal spacing).
inline int float_grid(const FloatLayout& f, const ExactRational& x) {
  const int e = x == 0 ? f.emin() : std::max(binade(x), f.emin());
  return e - f.fraction_bits();
}

inline ExactRational float_ulp(const FloatLayout& f, const ExactRational& x) { return pow2(float_grid(f, x)); }

/// x is the value of some finite word.
inline bool is_representable(const FloatLayout& f, const ExactRational& x) {
  if (x == 0) return true;
  if (boost::multiprecision::abs(x) > largest_finite(f)) return false;
  const ExactRational scaled = x * pow2(-float_grid(f, x));
  return boost::multiprecision::denominator(scaled) == 1;
}

/// x is a multiple of 2^lsb inside the range of width-bit words.
inline bool is_representable(int width, int lsb, const ExactRational& x) {
  const ExactRational scaled = x * pow2(-lsb);
  if (boost::multiprecision::denominator(scaled) != 1) return false;
  const BigInt n = boost::multiprecision::numerator(scaled);
  const BigInt top = BigInt(1) << (width - 1);
  return n >= -top && n <= top;
}

// ---------------------------------------------------------------------------
// Reports

struct Failure {
  std::string op;
  std::string inputs;
  std::string want;
  std::string got;
};

class VerifyReport {
 public:
  VerifyReport(std::string suite, std::string space) : suite_(std::move(suite)), space_(std::move(space)) {}

  void add_cases(std::uint64_t n) { cases_ += n; }
  void fail(std::string op, std::string inputs, std::string want, std::string got) {
    failures_.push_back({std::move(op), std::move(inputs), std::move(want), std::move(got)});
  }
  void merge(const VerifyReport& other) {
    cases_ += other.cases_;
    failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
  }
  void set_elapsed(double seconds) { seconds_ = seconds; }

  bool passed() const { return failures_.empty(); }
  std::uint64_t cases() const { return cases_; }
  const std::vector<Failure>& failures() const { return failures_; }
  const std::string& suite() const { return suite_; }
  double seconds() const { return seconds_; }

  /// Header, one FAIL line per failure (at most max_lines), then the summary.
  std::string to_text(std::size_t max_lines = 50) const {
    std::ostringstream os;
    os << "suite " << suite_ << " " << space_ << "\n";
    for (std::size_t i = 0; i < failures_.size() && i < max_lines; ++i) {
      const Failure& f = failures_[i];
      os << "FAIL " << f.op << " in=" << f.inputs << " want=" << f.want << " got=" << f.got << "\n";
    }
    os << (passed() ? "PASS " : "FAIL ") << cases_ << " " << failures_.size() << " ";
    os.setf(std::ios::fixed);
    os.precision(3);
    os << seconds_ << "\n";
    return os.str();
  }

 private:
  std::string suite_;
  std::string space_;
  std::uint64_t cases_ = 0;
  std::vector<Failure> failures_;
  double seconds_ = 0;
};

}  // namespace rnarith::oracle
