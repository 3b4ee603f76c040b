#include "rnarith/float_arith.hpp"

#include <gtest/gtest.h>

using namespace rnarith;

namespace {

DyadicRational val(const RnFloat& f) {
  const FloatValue v = value_of_float(f);
  EXPECT_TRUE(v.is_finite());
  return v.value;
}

bool finite(const RnFloat& f) { return value_of_float(f).is_finite(); }

std::vector<RnFloat> all_rnf8() {
  std::vector<RnFloat> out;
  for (std::uint64_t w = 0; w < 256; ++w) out.emplace_back(rnf8, w);
  return out;
}

const RnFloat kOne(rnf8, 0x30);
const RnFloat kTwo(rnf8, 0x40);

}  // namespace

TEST(FloatArith, ModeNames) {
  for (RoundingMode m : {RoundingMode::nearest, RoundingMode::toward_plus_inf, RoundingMode::toward_minus_inf,
                         RoundingMode::toward_zero, RoundingMode::away_from_zero})
    EXPECT_EQ(parse_rounding_mode(to_string(m)), m);
  EXPECT_FALSE(parse_rounding_mode("up"));
}

TEST(FloatArith, DirectedRoundBit) {
  const RnFixed kept(8, 5, -3, false);
  for (RoundingMode m : {RoundingMode::toward_plus_inf, RoundingMode::toward_minus_inf, RoundingMode::toward_zero,
                         RoundingMode::away_from_zero})
    EXPECT_FALSE(apply_directed_rounding(kept, false, {false}, m));
  EXPECT_TRUE(apply_directed_rounding(kept, false, {true}, RoundingMode::toward_plus_inf));
  EXPECT_FALSE(apply_directed_rounding(RnFixed(8, 5, -3, true), false, {true}, RoundingMode::toward_minus_inf));
  EXPECT_TRUE(apply_directed_rounding(kept, true, {true}, RoundingMode::toward_zero));
  EXPECT_FALSE(apply_directed_rounding(kept, true, {true}, RoundingMode::away_from_zero));
}

TEST(FloatArith, Sticky) {
  const RnFixed kept(8, 5, -3, false);
  EXPECT_FALSE(sticky_of(DyadicRational::from_int(1), kept).nonzero);
  EXPECT_TRUE(sticky_of(DyadicRational::from_int(1) + DyadicRational::pow2(-7), kept).nonzero);
  EXPECT_FALSE(sticky_of_remainder(false).nonzero);
  EXPECT_TRUE(sticky_of_remainder(true).nonzero);
}

TEST(FloatArith, RoundToFormatTruncates) {
  // 1 + 3/32 at lsb -5: first dropped digit becomes the round bit
  const Rounded r = round_to_format(RnFixed(35, 8, -5, false), rnf8, RoundingMode::nearest);
  EXPECT_TRUE(r.sticky.nonzero);
  EXPECT_EQ(val(r.value), DyadicRational(9, -3));
  const Rounded up = round_to_format(RnFixed(35, 8, -5, false), rnf8, RoundingMode::toward_plus_inf);
  EXPECT_GE(val(up.value), DyadicRational(35, -5));
  const Rounded exact = round_to_format(RnFixed(3, 4, 0, false), rnf8, RoundingMode::toward_zero);
  EXPECT_FALSE(exact.sticky.nonzero);
  EXPECT_EQ(val(exact.value), DyadicRational::from_int(3));
}

TEST(FloatArith, SimpleSums) {
  EXPECT_EQ(fadd(kOne, kOne), kTwo);
  for (const RnFloat& x : all_rnf8()) {
    if (!finite(x)) continue;
    EXPECT_EQ(fadd(x, float_negate(x)), positive_zero(rnf8)) << std::hex << x.word;
  }
}

TEST(FloatArith, NearPathCancellation) {
  const RnFloat next(rnf8, 0x32);  // 9/8
  EXPECT_EQ(val(next), DyadicRational(9, -3));
  const Rounded d = fsub_with_sticky(kOne, next);
  EXPECT_FALSE(d.sticky.nonzero);
  EXPECT_EQ(val(d.value), DyadicRational(-1, -3));
  EXPECT_TRUE(near_path(kOne, float_negate(kOne)).is_zero());
  EXPECT_THROW(near_path(kOne, kOne), contract_error);
}

TEST(FloatArith, FarPathExactPowers) {
  const RnFloat quarter(rnf8, 0x10);  // 2^-2
  EXPECT_EQ(val(quarter), DyadicRational::pow2(-2));
  EXPECT_EQ(val(fadd(kOne, quarter)), DyadicRational(5, -2));
  EXPECT_EQ(value_of(far_path(kOne, quarter).sum), DyadicRational(5, -2));
}

TEST(FloatArith, FarShortcut) {
  const RnFloat eight(rnf8, 0x60);
  const RnFloat tiny(rnf8, 0x02);
  EXPECT_EQ(val(eight), DyadicRational::from_int(8));
  EXPECT_EQ(val(tiny), DyadicRational::pow2(-5));
  EXPECT_EQ(far_shortcut(eight, tiny).word, 0x61u);
  EXPECT_EQ(far_shortcut(eight, float_negate(tiny)).word, 0x60u);
  EXPECT_THROW(far_shortcut(eight, kOne), contract_error);
}

TEST(FloatArith, MulIdentities) {
  const RnFloat minus_one = float_negate(kOne);
  for (const RnFloat& x : all_rnf8()) {
    if (!finite(x)) continue;
    EXPECT_EQ(val(fmul(kOne, x)), val(x)) << std::hex << x.word;
    EXPECT_EQ(val(fmul(minus_one, x)), -val(x)) << std::hex << x.word;
  }
}

TEST(FloatArith, DivIdentities) {
  for (const RnFloat& x : all_rnf8()) {
    if (!finite(x)) continue;
    EXPECT_EQ(val(fdiv(x, kOne)), val(x)) << std::hex << x.word;
    if (is_zero_value(x)) continue;
    const Rounded q = fdiv_with_sticky(x, x);
    EXPECT_EQ(val(q.value), DyadicRational::from_int(1)) << std::hex << x.word;
    EXPECT_FALSE(q.sticky.nonzero);
  }
}

TEST(FloatArith, Commutative) {
  for (const RnFloat& a : all_rnf8())
    for (const RnFloat& b : all_rnf8()) {
      ASSERT_EQ(fadd(a, b), fadd(b, a));
      ASSERT_EQ(fmul(a, b), fmul(b, a));
    }
}

TEST(FloatArith, Specials) {
  const RnFloat inf = infinity(rnf8, false);
  const RnFloat ninf = infinity(rnf8, true);
  const RnFloat zero = positive_zero(rnf8);
  EXPECT_EQ(classify(fadd(inf, ninf)), FloatClass::nan);
  EXPECT_EQ(fadd(inf, kOne), inf);
  EXPECT_EQ(classify(fmul(inf, zero)), FloatClass::nan);
  EXPECT_EQ(fmul(ninf, kTwo), ninf);
  EXPECT_EQ(classify(fdiv(zero, zero)), FloatClass::nan);
  EXPECT_EQ(fdiv(kOne, zero), inf);
  EXPECT_EQ(fdiv(float_negate(kOne), zero), ninf);
  EXPECT_EQ(fdiv(kOne, inf), zero);
  EXPECT_EQ(classify(fadd(canonical_nan(rnf8), kOne)), FloatClass::nan);
}

TEST(FloatArith, Overflow) {
  const RnFloat eight(rnf8, 0x60);
  // 16 still fits with the round bit set on the top binade
  EXPECT_EQ(val(fadd(eight, eight)), DyadicRational::from_int(16));
  const RnFloat sixteen = fadd(eight, eight);
  for (RoundingMode m : {RoundingMode::nearest, RoundingMode::toward_minus_inf, RoundingMode::toward_zero}) {
    EXPECT_EQ(fadd(sixteen, sixteen, m), infinity(rnf8, false));
    EXPECT_EQ(fmul(float_negate(sixteen), kTwo, m), infinity(rnf8, true));
  }
}

TEST(FloatArith, DirectedUnchangedWhenExact) {
  for (RoundingMode m : {RoundingMode::toward_plus_inf, RoundingMode::toward_minus_inf, RoundingMode::toward_zero,
                         RoundingMode::away_from_zero})
    for (const RnFloat& a : all_rnf8())
      for (const RnFloat& b : all_rnf8()) {
        const Rounded n = fmul_with_sticky(a, b);
        if (n.sticky.nonzero) continue;
        ASSERT_EQ(fmul(a, b, m), n.value);
      }
}

TEST(FloatArith, FormatMismatch) {
  EXPECT_THROW(fadd(kOne, RnFloat(rnf16, 0)), contract_error);
  EXPECT_THROW(fmul(kOne, RnFloat(rnf16, 0)), contract_error);
  EXPECT_THROW(fdiv(kOne, RnFloat(rnf16, 0)), contract_error);
}
