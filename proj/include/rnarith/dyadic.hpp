// Exact dyadic rationals m * 2^e and closed intervals of them.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace rnarith {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when a documented precondition of a library operation is violated.
class contract_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown by the literal parsers.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline BigInt to_bigint(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1u
                              : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(mag >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(mag);
  return neg ? BigInt(-r) : r;
}

/// Exact value mantissa * 2^exp, kept in canonical form: the mantissa is odd,
/// or zero with exp == 0.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt mantissa, int exp) : mantissa_(std::move(mantissa)), exp_(exp) {
    normalize();
  }
  static DyadicRational from_int(long long v) { return {BigInt(v), 0}; }
  static DyadicRational pow2(int e) { return {BigInt(1), e}; }

  const BigInt& mantissa() const { return mantissa_; }
  int exp() const { return exp_; }
  int sign() const { return mantissa_.sign(); }
  bool is_zero() const { return mantissa_.is_zero(); }

  /// Multiplies by 2^k.
  DyadicRational scaled(int k) const { return {mantissa_, exp_ + k}; }

  DyadicRational abs() const { return {boost::multiprecision::abs(mantissa_), exp_}; }

  friend DyadicRational operator-(const DyadicRational& a) { return {-a.mantissa_, a.exp_}; }

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int e = std::min(a.exp_, b.exp_);
    BigInt m = (a.mantissa_ << (a.exp_ - e)) + (b.mantissa_ << (b.exp_ - e));
    return {std::move(m), e};
  }
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
    return a + (-b);
  }
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
    return {a.mantissa_ * b.mantissa_, a.exp_ + b.exp_};
  }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exp_ == b.exp_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
    const int e = std::min(a.exp_, b.exp_);
    const BigInt lhs = a.mantissa_ << (a.exp_ - e);
    const BigInt rhs = b.mantissa_ << (b.exp_ - e);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Exact decimal expansion; every dyadic rational has a finite one.
  std::string to_decimal() const {
    if (exp_ >= 0) return BigInt(mantissa_ << exp_).str();
    const unsigned k = static_cast<unsigned>(-exp_);
    // m / 2^k = m * 5^k / 10^k
    BigInt scaled = boost::multiprecision::abs(mantissa_) * boost::multiprecision::pow(BigInt(5), k);
    std::string digits = scaled.str();
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, ".");
    return (mantissa_.sign() < 0 ? "-" : "") + digits;
  }

 private:
  void normalize() {
    if (mantissa_.is_zero()) {
      exp_ = 0;
      return;
    }
    const unsigned tz = boost::multiprecision::lsb(boost::multiprecision::abs(mantissa_));
    if (tz > 0) {
      mantissa_ = mantissa_.sign() < 0 ? BigInt(-(BigInt(-mantissa_) >> tz)) : BigInt(mantissa_ >> tz);
      exp_ += static_cast<int>(tz);
    }
  }

  BigInt mantissa_ = 0;
  int exp_ = 0;
};

/// Closed interval [lo ; hi] with lo <= hi.
struct DyadicInterval {
  DyadicRational lo;
  DyadicRational hi;

  DyadicInterval(DyadicRational l, DyadicRational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw contract_error("DyadicInterval: lo > hi");
  }

  DyadicRational width() const { return hi - lo; }
  bool contains(const DyadicRational& x) const { return lo <= x && x <= hi; }
  bool subset_of(const DyadicInterval& other) const { return other.lo <= lo && hi <= other.hi; }

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;

  std::string to_string() const { return "[" + lo.to_decimal() + " ; " + hi.to_decimal() + "]"; }
};

}  // namespace rnarith
