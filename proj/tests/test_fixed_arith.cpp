#include "rnarith/fixed_arith.hpp"

#include <gtest/gtest.h>

using namespace rnarith;

namespace {

RnFixed lit(const char* s) { return parse_rn_literal(s); }

template <class F>
void for_all(int width, int lsb, F&& f) {
  const Word top = Word(1) << (width - 1);
  for (Word a = -top; a < top; ++a)
    for (bool r : {false, true}) f(RnFixed(a, width, lsb, r));
}

}  // namespace

TEST(Add, ZeroIsNeutral) {
  const RnFixed a = lit("rn:01011:r1@0");
  const RnFixed s = add(a, RnFixed::zero(5, 0));
  EXPECT_EQ(s, a.with_width(6));
}

TEST(Add, CarryInFromBothRoundBits) {
  const RnFixed s = add(lit("rn:00101:r1@0"), lit("rn:00011:r1@0"));
  EXPECT_EQ(s, lit("rn:001001:r1@0"));
  EXPECT_EQ(value_of(s), DyadicRational::from_int(10));
}

TEST(Add, MismatchedUnitIsRejected) {
  EXPECT_THROW(add(lit("rn:01:r0@0"), lit("rn:01:r0@1")), contract_error);
}

TEST(AddAlt, SelfDifferenceIsZeroZero) {
  for_all(6, -2, [](const RnFixed& x) {
    ASSERT_EQ(add_alt(x, negate(x)), RnFixed::zero(7, -2));
    // its neutral element is (-u, 1)
    ASSERT_EQ(add_alt(x, RnFixed(-1, 6, -2, true)), x.with_width(7));
  });
}

TEST(AddAlt, SameValueAsAdd) {
  for_all(6, 0, [](const RnFixed& x) {
    for_all(6, 0, [&](const RnFixed& y) { ASSERT_EQ(value_of(add_alt(x, y)), value_of(add(x, y))); });
  });
}

TEST(Sub, SelfDifferenceIsMinusUnitWithRoundBit) {
  for_all(6, 3, [](const RnFixed& x) {
    const RnFixed d = sub(x, x);
    ASSERT_EQ(d, RnFixed(-1, 7, 3, true));
    ASSERT_TRUE(value_of(d).is_zero());
  });
}

TEST(Sub, Antisymmetry) {
  for_all(6, 0, [](const RnFixed& x) {
    ASSERT_EQ(value_of(sub(x, RnFixed::zero(6, 0))), value_of(x));
    for_all(6, 0, [&](const RnFixed& y) { ASSERT_EQ(value_of(sub(x, y)), -value_of(sub(y, x))); });
  });
}

TEST(ShiftLeft, AppendsRoundBitCopies) {
  const RnFixed s = shift_left(lit("rn:01011:r1@0"), 2);
  EXPECT_EQ(s, lit("rn:0101111:r1@0"));
  EXPECT_EQ(value_of(s), DyadicRational::from_int(48));
  EXPECT_EQ(shift_left(lit("rn:01011:r1@0"), 0), lit("rn:01011:r1@0"));
  EXPECT_THROW(shift_left(lit("rn:01:r0@0"), -1), contract_error);
  for_all(6, -1, [](const RnFixed& x) { ASSERT_EQ(shift_left(x, 1), add(x, x)); });
}

TEST(Mul, ExampleProduct) {
  const RnFixed p = mul(lit("rn:01011:r1@0"), lit("rn:01001:r1@0"));
  EXPECT_EQ(p, lit("rn:001110111:r1@0"));
  EXPECT_EQ(value_of(p), DyadicRational::from_int(120));
  EXPECT_TRUE(interval_of(p).subset_of({DyadicRational(437, -2), DyadicRational::from_int(120)}));
}

TEST(Mul, ByExactOne) {
  for_all(5, 0, [](const RnFixed& a) { ASSERT_EQ(value_of(mul(a, lit("rn:00001:r0@0"))), value_of(a)); });
}

TEST(Mul, SignHandling) {
  for_all(5, -2, [](const RnFixed& a) {
    for_all(5, -2, [&](const RnFixed& b) {
      const RnFixed p = mul(a, b);
      ASSERT_EQ(value_of(p), value_of(a) * value_of(b));
      ASSERT_EQ(p.lsb_exp(), -4);
      ASSERT_EQ(p, negate(mul(negate(a), b)));
    });
  });
}

TEST(Mul, UnitAboveOneIsRejected) {
  EXPECT_THROW(mul(lit("rn:01:r0@1"), lit("rn:01:r0@1")), contract_error);
}

TEST(Div, NeutralDivisor) {
  const RnFixed one = lit("rn:01000:r0@-3");
  const DivResult d = div(one, one, 3);
  EXPECT_TRUE(d.exact);
  EXPECT_EQ(value_of(d.quotient), DyadicRational::from_int(1));
  EXPECT_EQ(d.shift, 0);
  // (x, r) / (1, 0) keeps the operand
  for (Word x = 8; x < 16; ++x)
    for (bool r : {false, true}) {
      const RnFixed a(x, 5, -3, r);
      ASSERT_EQ(div(a, one, 3).quotient.with_width(5), a);
    }
}

TEST(Div, MidpointQuotient) {
  // q = 1.5 / (1 + 1/16) = 24/17
  const DivResult d = div(lit("rn:01100:r0@-3"), lit("rn:01000:r1@-3"), 3);
  EXPECT_FALSE(d.exact);
  EXPECT_EQ(d.shift, 0);
  EXPECT_EQ(to_literal(d.approx), "rn:0101101:r0@-5");  // 45/32 < 24/17
  // round bit is the second bit below the kept ones: 1.375 <= 24/17
  EXPECT_EQ(to_literal(d.quotient), "rn:01011:r0@-3");
  EXPECT_EQ(d.remainder_sign, 1);
  EXPECT_EQ(tail_digit_sign(d.quotient), TailSign::rounded_down);
}

TEST(Div, QuotientBelowOneShifts) {
  const DivResult d = div(lit("rn:01000:r0@-3"), lit("rn:01110:r1@-3"), 3);
  EXPECT_EQ(d.shift, 1);
  EXPECT_EQ(d.quotient.lsb_exp(), -4);
  EXPECT_EQ(d.approx.lsb_exp(), -6);
}

TEST(Div, Contracts) {
  const RnFixed one = lit("rn:01000:r0@-3");
  EXPECT_THROW(div(one, lit("rn:00100:r0@-3"), 3), contract_error);
  EXPECT_THROW(div(one, one, 4), contract_error);
  EXPECT_THROW(div(one, RnFixed::zero(5, -3), 3), std::domain_error);
}

TEST(Div, ValueForm) {
  // (1 + 1/8) / 1 with the encoded values: exact
  const DivResult d = div(lit("rn:01000:r1@-3"), lit("rn:01000:r0@-3"), 3, DivForm::value);
  EXPECT_TRUE(d.exact);
  EXPECT_EQ(value_of(d.approx), DyadicRational(9, -3));
}
