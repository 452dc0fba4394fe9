#include <gtest/gtest.h>

#include "sepcode/bounds.h"
#include "sepcode/construct.h"
#include "sepcode/verify.h"
#include "support/fixtures.h"

namespace sepcode {
namespace {

TEST(BoundsTest, ClosedForms) {
  EXPECT_EQ(upper_3bar_len3(4).value, 12u);
  EXPECT_EQ(upper_3bar_len3(5).value, 18u);
  EXPECT_EQ(lower_3bar_len3(4).value, 8u);
  EXPECT_EQ(lower_3bar_len3(10).value, 27u);
  EXPECT_EQ(lower_3bar_len3(10).kind, BoundKind::kLower);
  EXPECT_EQ(upper_n_eq_t(3, 4).value, 16u);
  EXPECT_EQ(upper_n_eq_t(5, 3).value, 15u);
  EXPECT_EQ(trivial_fpc_size(2, 5, 3).value, 8u);
  EXPECT_TRUE(trivial_fpc_size(2, 5, 3).optimal);
  EXPECT_THROW(upper_3bar_len3(3), InvalidArgument);
  EXPECT_THROW(trivial_fpc_size(3, 5, 3), InvalidArgument);
}

TEST(BoundsTest, GeneralUpperBound) {
  // n=3, t=3: ceil(3/2)=2, floor=1, r=1 -> max(q^2, (q^2-1)+(q-1)).
  const auto b = upper_general(3, 4, 3);
  EXPECT_EQ(b.value, 15u + 3u);
  EXPECT_TRUE(b.conditional);
  // n=4, t=3: r=0 -> max(q^2, 2(q^2-1)).
  EXPECT_EQ(upper_general(4, 3, 3).value, 16u);
  // n=3, t=4: d=3, r=0 -> max(q, 3(q-1)).
  EXPECT_EQ(upper_general(3, 5, 4).value, 12u);
  EXPECT_THROW(upper_general(3, 4, 2), InvalidArgument);
}

TEST(BoundsTest, ApplicableOrdersUpperFirst) {
  const auto list = applicable_bounds(3, 16, 3);
  ASSERT_EQ(list.size(), 4u);
  EXPECT_EQ(list[0].source, "upper-general");
  EXPECT_EQ(list[1].source, "upper-n-eq-t");
  EXPECT_EQ(list[2].source, "upper-3bar-len3");
  EXPECT_EQ(list[2].value, 192u);
  EXPECT_EQ(list[3].source, "lower-cube");
  EXPECT_EQ(list[3].value, 64u);

  const auto q2 = applicable_bounds(3, 2, 3);
  ASSERT_FALSE(q2.empty());
  EXPECT_EQ(q2.back().source, "exact-3bar-len3-q2");
  EXPECT_EQ(q2.back().value, 3u);

  const auto short_len = applicable_bounds(2, 7, 3);
  ASSERT_EQ(short_len.size(), 1u);
  EXPECT_EQ(short_len[0].value, 12u);
}

TEST(BoundsTest, Tightest) {
  EXPECT_EQ(tightest_upper(3, 4, 3)->value, 12u);
  EXPECT_EQ(tightest_upper(3, 2, 3)->value, 3u);
  EXPECT_EQ(tightest_upper(3, 3, 3)->value, 9u);
  EXPECT_FALSE(tightest_upper(3, 4, 1));
}

TEST(BoundsTest, CertifyOptimalC4) {
  const Code code = testing::c4();
  const auto cert = certify(code, oracle_sc_bar(code, 3));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->size, 12u);
  EXPECT_EQ(cert->bound.value, 12u);
  EXPECT_TRUE(cert->optimal);
  EXPECT_EQ(cert->gap, 0u);

  const auto weight = testing::weight_one();
  const auto w = certify(weight, check_sc3bar_structural(weight));
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->optimal);
}

TEST(BoundsTest, CertifyGapAndErrors) {
  const Code cube = phf_cube(2);
  const auto cert = certify(cube, check_sc3bar_structural(cube));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->bound.value, 12u);
  EXPECT_EQ(cert->gap, 4u);
  EXPECT_FALSE(cert->optimal);

  const Code bad = testing::delta1_instance();
  EXPECT_THROW(certify(bad, oracle_sc_bar(bad, 3)), InvalidArgument);
  EXPECT_THROW(certify(cube, check_fpc(cube, 2)), InvalidArgument);
}

TEST(BoundsTest, ConstructionsRespectBounds) {
  for (const auto& [name, code] : testing::all_fixtures()) {
    if (code.length() != 3 || !check_sc3bar_structural(code).holds) continue;
    for (const auto& b : applicable_bounds(3, code.alphabet_size(), 3)) {
      if (b.kind == BoundKind::kUpper && !b.conditional) {
        EXPECT_LE(code.size(), b.value) << name << " " << b.source;
      }
    }
  }
}

}  // namespace
}  // namespace sepcode
