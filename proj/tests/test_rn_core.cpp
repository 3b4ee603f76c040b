#include "rnarith/rn_fixed.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace rnarith;

namespace {

RnFixed lit(const char* s) { return parse_rn_literal(s); }

DyadicRational twos_complement(Word w) { return {to_bigint(w), 0}; }

}  // namespace

TEST(BoothRecode, ExampleWord) {
  const RnFixed x = lit("rn:110100110010:r0@0");
  const SignedDigitString sd = booth_recode(x.bits(), 12, 0);
  EXPECT_EQ(sd.digits, (std::vector<int>{0, -1, 1, -1, 0, 1, 0, -1, 0, 1, -1, 0}));
  EXPECT_EQ(sd.value(), DyadicRational::from_int(-718));
  EXPECT_TRUE(validate_rn(sd));
}

TEST(BoothRecode, Zero) {
  const SignedDigitString sd = booth_recode(0, 12, 0);
  EXPECT_EQ(sd.digits, std::vector<int>(12, 0));
}

TEST(BoothRecode, EveryEightBitWord) {
  for (Word w = -128; w < 128; ++w) {
    const SignedDigitString sd = booth_recode(w, 8, 0);
    ASSERT_EQ(sd.value(), twos_complement(w)) << int(w);
    ASSERT_TRUE(validate_rn(sd));
  }
}

TEST(BoothRecode, TenBitWordsAreRn) {
  for (Word w = -512; w < 512; ++w) ASSERT_TRUE(validate_rn(booth_recode(w, 10, -3)));
}

TEST(ValidateRn, Alternation) {
  EXPECT_TRUE(validate_rn({{1, -1, 0, 1, 0, -1}, 0}));
  EXPECT_FALSE(validate_rn({{1, 1}, 0}));
  EXPECT_FALSE(validate_rn({{-1, 0, 0, -1}, 0}));
  EXPECT_FALSE(validate_rn({{2}, 0}));
  EXPECT_TRUE(validate_rn({{0, 0, 0}, 0}));
}

TEST(SignedDigits, TruncatedExample) {
  const SignedDigitString sd = sd_of_canonical(lit("rn:1101001100:r1@2"));
  EXPECT_EQ(sd.digits, (std::vector<int>{0, -1, 1, -1, 0, 1, 0, -1, 0, 1}));
  EXPECT_EQ(sd.lsb_exp, 2);
  EXPECT_EQ(sd.value(), DyadicRational::from_int(-716));
}

TEST(SignedDigits, CanonicalFromDigits) {
  SignedDigitString sd{{0, -1, 1, -1, 0, 1, 0, -1, 0, 1}, 2};
  EXPECT_EQ(canonical_of_sd(sd), lit("rn:1101001100:r1@2"));
  EXPECT_EQ(canonical_of_sd({std::vector<int>(6, 0), 0}), RnFixed::zero(6, 0));
  EXPECT_THROW(canonical_of_sd({{1, 1}, 0}), contract_error);
  EXPECT_THROW(canonical_of_sd({{}, 0}), contract_error);
}

TEST(SignedDigits, RoundTripEveryWidthEightEncoding) {
  for (Word w = -128; w < 128; ++w)
    for (bool r : {false, true}) {
      const RnFixed x(w, 8, -1, r);
      const SignedDigitString sd = sd_of_canonical(x);
      ASSERT_TRUE(validate_rn(sd));
      ASSERT_EQ(sd.value(), value_of(x));
      // (-1, 1) and (0, 0) share the all-zero digit string
      if (w == -1 && r) ASSERT_EQ(canonical_of_sd(sd), RnFixed::zero(8, -1));
      else ASSERT_EQ(canonical_of_sd(sd), x);
      ASSERT_EQ(sd.digits.back(), int(r) - int(x.bit(0)));
    }
}

TEST(SignedDigits, RandomValidStringsKeepTheirValue) {
  std::mt19937 rng(7);
  for (int n = 0; n < 500; ++n) {
    // build an alternating string: pick positions, alternate signs
    std::vector<int> d(10, 0);
    int sign = (rng() & 1) ? 1 : -1;
    for (int i = 1; i < 10; ++i)
      if (rng() % 3 == 0) {
        d[i] = sign;
        sign = -sign;
      }
    const SignedDigitString sd{d, -4};
    ASSERT_TRUE(validate_rn(sd));
    const RnFixed x = canonical_of_sd(sd);
    ASSERT_EQ(value_of(x), sd.value());
    ASSERT_EQ(sd_of_canonical(x), sd);
  }
}

TEST(Value, Basics) {
  EXPECT_EQ(value_of(lit("rn:01011:r1@0")), DyadicRational::from_int(12));
  EXPECT_EQ(value_of(lit("rn:0101:r0@-2")), DyadicRational(5, -2));
  for (Word a = -128; a < 127; ++a)
    ASSERT_EQ(value_of(RnFixed(a, 8, 0, true)), value_of(RnFixed(a + 1, 8, 0, false)));
}

TEST(Truncate, ExampleTie) {
  const RnFixed x = lit("rn:110100110010:r0@0");
  const RnFixed t = truncate_at(x, 2);
  EXPECT_EQ(t, lit("rn:1101001100:r1@2"));
  EXPECT_EQ(value_of(t), DyadicRational::from_int(-716));
  EXPECT_EQ(truncate_at(x, 0), x);
  EXPECT_THROW(truncate_at(x, -1), contract_error);
}

TEST(Truncate, HalfUlpBound) {
  for (Word w = -2048; w < 2048; ++w)
    for (bool r : {false, true}) {
      const RnFixed x(w, 12, 0, r);
      for (int k = 0; k <= 14; ++k) {
        const DyadicRational err = (value_of(truncate_at(x, k)) - value_of(x)).abs();
        ASSERT_LE(err, DyadicRational::pow2(k - 1)) << to_literal(x) << " k=" << k;
      }
    }
}

TEST(Negate, Examples) {
  EXPECT_EQ(negate(lit("rn:01011:r1@0")), lit("rn:10100:r0@0"));
  EXPECT_EQ(value_of(lit("rn:10100:r0@0")), DyadicRational::from_int(-12));
  const RnFixed z = negate(RnFixed::zero(5, 0));
  EXPECT_EQ(z, lit("rn:11111:r1@0"));
  EXPECT_TRUE(value_of(z).is_zero());
}

TEST(Interval, Examples) {
  const DyadicInterval i = interval_of(lit("rn:001110111:r1@0"));
  EXPECT_EQ(i.lo, DyadicRational(239, -1));
  EXPECT_EQ(i.hi, DyadicRational::from_int(120));
  const DyadicInterval j = interval_of(RnFixed(6, 5, -1, false));
  EXPECT_EQ(j.lo, DyadicRational::from_int(3));
  EXPECT_EQ(j.hi, DyadicRational(13, -2));
}

TEST(Interval, NeighboursTile) {
  for (Word a = -64; a < 63; ++a) {
    const DyadicInterval i0 = interval_of(RnFixed(a, 8, -2, false));
    const DyadicInterval i1 = interval_of(RnFixed(a, 8, -2, true));
    const DyadicInterval i2 = interval_of(RnFixed(a + 1, 8, -2, false));
    const DyadicInterval i3 = interval_of(RnFixed(a + 1, 8, -2, true));
    ASSERT_EQ(i0.hi, i1.lo);
    ASSERT_EQ(i1.hi, i2.lo);
    ASSERT_EQ(i2.hi, i3.lo);
    ASSERT_EQ(i3.hi - i0.lo, DyadicRational(1, -1));  // 2u with u = 1/4
    ASSERT_EQ(i0.width(), DyadicRational(1, -3));
  }
}

TEST(TailSign, FollowsRoundBit) {
  EXPECT_EQ(tail_digit_sign(lit("rn:1101001100:r1@2")), TailSign::rounded_up);
  EXPECT_EQ(tail_digit_sign(lit("rn:00101:r0@0")), TailSign::rounded_down);
  EXPECT_THROW(tail_digit_sign(RnFixed::zero(4, 0)), contract_error);
  EXPECT_THROW(tail_digit_sign(lit("rn:1111:r1@0")), contract_error);
  for (Word w = -128; w < 128; ++w)
    for (bool r : {false, true}) {
      const RnFixed x(w, 8, 0, r);
      if (value_of(x).is_zero()) continue;
      const auto sd = sd_of_canonical(x).digits;
      const auto last = std::find_if(sd.rbegin(), sd.rend(), [](int d) { return d != 0; });
      ASSERT_EQ(tail_digit_sign(x) == TailSign::rounded_up, *last == 1);
    }
}

TEST(Range, Extremes) {
  const FixedRange r5 = range_of(5);
  EXPECT_EQ(r5.max, lit("rn:01111:r1@0"));
  EXPECT_EQ(r5.min, lit("rn:10000:r0@0"));
  EXPECT_EQ(value_of(r5.max), DyadicRational::from_int(16));
  EXPECT_EQ(value_of(r5.min), DyadicRational::from_int(-16));
  EXPECT_EQ(negate(r5.max), r5.min);
  const FixedRange r2 = range_of(2);
  EXPECT_EQ(value_of(r2.max), DyadicRational::from_int(2));
  EXPECT_EQ(value_of(r2.min), DyadicRational::from_int(-2));
  EXPECT_THROW(range_of(1), contract_error);
}

TEST(Literal, RoundTrip) {
  for (const char* s : {"rn:110100110010:r0@0", "rn:1:r1@-3", "rn:0111:r0@12"})
    EXPECT_EQ(to_literal(lit(s)), s);
  for (const char* bad : {"rn:", "rn:012:r0@0", "rn:01:r2@0", "rn:01:r0@x", "x:01:r0@0", "rn:01:r0"})
    EXPECT_THROW(lit(bad), parse_error) << bad;
}

TEST(RnFixed, ContractChecks) {
  EXPECT_THROW(RnFixed(8, 4, 0, false), contract_error);
  EXPECT_THROW(RnFixed(0, 0, 0, false), contract_error);
  EXPECT_THROW(RnFixed(0, 128, 0, false), contract_error);
  EXPECT_NO_THROW(RnFixed(-8, 4, 0, false));
}
