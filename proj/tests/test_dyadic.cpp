#include "rnarith/dyadic.hpp"

#include <gtest/gtest.h>

using rnarith::BigInt;
using rnarith::DyadicInterval;
using rnarith::DyadicRational;

TEST(Dyadic, NormalizesMantissa) {
  const DyadicRational x(BigInt(12), 0);
  EXPECT_EQ(x.mantissa(), 3);
  EXPECT_EQ(x.exp(), 2);
  EXPECT_EQ(DyadicRational(BigInt(0), 7), DyadicRational());
  EXPECT_EQ(DyadicRational(BigInt(-8), -5), DyadicRational(BigInt(-1), -2));
}

TEST(Dyadic, Arithmetic) {
  const DyadicRational a(BigInt(3), -2), b(BigInt(5), 1);  // 0.75, 10
  EXPECT_EQ(a + b, DyadicRational(BigInt(43), -2));
  EXPECT_EQ(a - b, DyadicRational(BigInt(-37), -2));
  EXPECT_EQ(a * b, DyadicRational(BigInt(15), -1));
  EXPECT_EQ(-a, DyadicRational(BigInt(-3), -2));
  EXPECT_LT(a, b);
  EXPECT_GT(-a, -b);
  EXPECT_EQ(a.scaled(2), DyadicRational::from_int(3));
  EXPECT_EQ((-a).abs(), a);
}

TEST(Dyadic, DecimalIsExact) {
  EXPECT_EQ(DyadicRational::from_int(-718).to_decimal(), "-718");
  EXPECT_EQ(DyadicRational(BigInt(1), -10).to_decimal(), "0.0009765625");
  EXPECT_EQ(DyadicRational(BigInt(-239), -1).to_decimal(), "-119.5");
  EXPECT_EQ(DyadicRational().to_decimal(), "0");
  EXPECT_EQ(DyadicRational::pow2(70).to_decimal(), "1180591620717411303424");
}

TEST(Dyadic, Interval) {
  const DyadicInterval i(DyadicRational(BigInt(239), -1), DyadicRational::from_int(120));
  const DyadicInterval j(DyadicRational(BigInt(437), -2), DyadicRational::from_int(120));
  EXPECT_TRUE(i.subset_of(j));
  EXPECT_FALSE(j.subset_of(i));
  EXPECT_TRUE(i.contains(DyadicRational::from_int(120)));
  EXPECT_EQ(i.width(), DyadicRational(BigInt(1), -1));
  EXPECT_EQ(i.to_string(), "[119.5 ; 120]");
  EXPECT_THROW(DyadicInterval(DyadicRational::from_int(1), DyadicRational::from_int(0)), rnarith::contract_error);
}

TEST(Dyadic, WideConversion) {
  const __int128 big = (__int128(1) << 100) + 7;
  EXPECT_EQ(rnarith::to_bigint(big), (BigInt(1) << 100) + 7);
  EXPECT_EQ(rnarith::to_bigint(-big), -((BigInt(1) << 100) + 7));
  const __int128 lowest = -(__int128(1) << 126) * 2;
  EXPECT_EQ(rnarith::to_bigint(lowest), -(BigInt(1) << 127));
}
