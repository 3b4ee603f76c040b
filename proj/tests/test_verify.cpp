#include "rnarith/verify.hpp"

#include <gtest/gtest.h>

using namespace rnarith;
using namespace rnarith::verify;

namespace {

Options small(int width) {
  Options o;
  o.width = width;
  o.threads = 1;
  return o;
}

void expect_pass(const VerifyReport& r) {
  EXPECT_TRUE(r.passed()) << r.to_text(10);
  EXPECT_GT(r.cases(), 0u);
}

}  // namespace

TEST(Verify, ReferenceVectors) { expect_pass(run_suite("paper-examples")); }

TEST(Verify, FixedAddSmall) {
  expect_pass(run_suite("fixed-add", small(5)));
  expect_pass(run_suite("fixed-add-alt", small(5)));
  expect_pass(run_suite("fixed-sub", small(5)));
}

TEST(Verify, FixedMulSmall) { expect_pass(run_suite("fixed-mul", small(4))); }

TEST(Verify, FixedDivOneP) {
  Options o = small(0);
  o.p = 3;
  expect_pass(run_suite("fixed-div", o));
}

TEST(Verify, TruncateSmall) { expect_pass(run_suite("truncate", small(7))); }

TEST(Verify, NegateSmall) { expect_pass(run_suite("negate", small(6))); }

TEST(Verify, FloatFormatSmall) {
  Options o = small(0);
  o.format = rnf8;
  const VerifyReport r = run_suite("float-format", o);
  expect_pass(r);
  EXPECT_EQ(r.cases(), 256u);
}

TEST(Verify, FloatOpsSmall) {
  expect_pass(run_suite("float-add", small(0)));
  expect_pass(run_suite("far-shortcut", small(0)));
}

TEST(Verify, Rejections) {
  EXPECT_THROW(run_suite("no-such-suite"), std::invalid_argument);
  Options o = small(0);
  o.format = rnf16;
  EXPECT_THROW(run_suite("float-mul", o), std::exception);
  EXPECT_THROW(to_oracle(RnFixed(0, 70, 0, false)), contract_error);
}

TEST(Verify, NamesRegistered) {
  const auto& names = suite_names();
  for (const char* n : {"paper-examples", "fixed-div", "float-directed", "float-round-bit", "all"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
}

TEST(Verify, HexWords) {
  EXPECT_EQ(hex(0x30), "0x30");
  EXPECT_EQ(hex(0), "0x0");
}
