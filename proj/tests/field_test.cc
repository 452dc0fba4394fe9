#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sepcode/error.h"
#include "sepcode/field.h"
#include "support/brute.h"

namespace sepcode {
namespace {

using testing::brute_order;
using testing::trial_division_irreducible;

TEST(FieldTest, PrimeFieldDefaults) {
  const auto f = FiniteField::make(7, 1);
  EXPECT_EQ(f.order(), 7u);
  EXPECT_EQ(f.primitive(), 3u);
  EXPECT_EQ(brute_order(f, 1), 1u);
  EXPECT_EQ(brute_order(f, 2), 3u);
  EXPECT_EQ(brute_order(f, 3), 6u);
}

TEST(FieldTest, BinaryFieldHasTrivialPrimitive) {
  const auto f = FiniteField::make(2, 1);
  EXPECT_EQ(f.primitive(), 1u);
  EXPECT_EQ(f.dlog(1), 0u);
}

TEST(FieldTest, Gf7Arithmetic) {
  const auto f = FiniteField::make(7, 1);
  EXPECT_EQ(f.mul(3, 3), 2u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.exp(0), 1u);
  EXPECT_EQ(f.exp(2), 2u);
  EXPECT_EQ(f.dlog(6), 3u);
  for (Element x = 0; x < 7; ++x) EXPECT_EQ(f.add(x, f.neg(x)), 0u);
}

TEST(FieldTest, CubeRoots) {
  const auto f7 = FiniteField::make(7, 1);
  EXPECT_EQ(cube_root(f7).xi, 2u);
  const auto f13 = FiniteField::make(13, 1);
  EXPECT_EQ(f13.primitive(), 2u);
  EXPECT_EQ(cube_root(f13).xi, 3u);
  EXPECT_THROW(cube_root(FiniteField::make(2, 2)), InvalidArgument);
}

TEST(FieldTest, Gf121PrimitiveOrder) {
  const auto f = FiniteField::make(11, 2);
  ASSERT_EQ(f.order(), 121u);
  for (std::uint64_t l : {2u, 3u, 5u}) {
    EXPECT_NE(f.pow(f.primitive(), 120 / l), 1u);
  }
  EXPECT_EQ(brute_order(f, f.primitive()), 120u);
}

TEST(FieldTest, ModulusIsLeastIrreducible) {
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u},
                      {7u, 3u}, {5u, 4u}, {2u, 8u}}) {
    const auto f = FiniteField::make(p, m);
    const auto& mod = f.modulus();
    ASSERT_EQ(mod.size(), m + 1);
    EXPECT_TRUE(trial_division_irreducible(mod, p)) << p << "^" << m;
    // Every candidate before it in the same order is reducible.
    std::vector<std::uint32_t> c(m, 0);
    while (true) {
      std::vector<std::uint32_t> g(c.begin(), c.end());
      g.push_back(1);
      if (g == mod) break;
      EXPECT_FALSE(trial_division_irreducible(g, p));
      std::int64_t i = m - 1;
      while (i >= 0 && ++c[i] == p) c[i--] = 0;
      ASSERT_GE(i, 0);
    }
  }
}

TEST(FieldTest, DlogIsBijection) {
  for (auto [p, m] : {std::pair{13u, 1u}, {3u, 3u}, {11u, 2u}}) {
    const auto f = FiniteField::make(p, m);
    std::set<std::uint64_t> logs;
    for (Element x = 1; x < f.order(); ++x) {
      const auto k = f.dlog(x);
      EXPECT_LT(k, f.order() - 1);
      EXPECT_EQ(f.exp(static_cast<std::int64_t>(k)), x);
      logs.insert(k);
    }
    EXPECT_EQ(logs.size(), f.order() - 1);
    EXPECT_EQ(f.exp(-1), f.exp(static_cast<std::int64_t>(f.order()) - 2));
  }
}

TEST(FieldTest, LogOfProductIsSumOfLogs) {
  const auto f = FiniteField::make(5, 2);
  for (Element x = 1; x < 25; ++x) {
    for (Element y = 1; y < 25; ++y) {
      EXPECT_EQ(f.dlog(f.mul(x, y)), (f.dlog(x) + f.dlog(y)) % 24);
    }
  }
}

TEST(FieldTest, ExtensionAxiomsSampled) {
  const auto f = FiniteField::make(7, 3);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Element> d(0, 342);
  for (int i = 0; i < 2000; ++i) {
    const Element a = d(rng), b = d(rng), c = d(rng);
    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  }
}

TEST(FieldTest, EpsIndexSelectsRank) {
  const auto base = FiniteField::make(13, 1);
  const auto prims = base.primitive_elements();
  EXPECT_EQ(prims, (std::vector<Element>{2, 6, 7, 11}));
  for (std::uint64_t r = 0; r < prims.size(); ++r) {
    const auto f = FiniteField::make(13, 1, r);
    EXPECT_EQ(f.primitive(), prims[r]);
    EXPECT_EQ(f.primitive_rank(), r);
  }
  EXPECT_THROW(FiniteField::make(13, 1, 4), InvalidArgument);
}

TEST(FieldTest, Deterministic) {
  EXPECT_EQ(FiniteField::make(5, 4), FiniteField::make(5, 4));
  const auto f = FiniteField::make(3, 4, 3);
  EXPECT_EQ(FiniteField::from_descriptor(f.descriptor()), f);
}

TEST(FieldTest, RejectsBadInput) {
  EXPECT_THROW(FiniteField::make(6, 1), InvalidArgument);
  EXPECT_THROW(FiniteField::make(2, 0), InvalidArgument);
  EXPECT_THROW(FiniteField::make(2, 33), InvalidArgument);
  const auto f = FiniteField::make(7, 1);
  EXPECT_THROW(f.inv(0), InvalidArgument);
  EXPECT_THROW(f.dlog(0), InvalidArgument);
  EXPECT_THROW(f.add(7, 1), InvalidArgument);
  EXPECT_THROW(f.with_primitive(2), InvalidArgument);
  FieldDescriptor reducible{2, 2, {1, 0, 1}, 1};
  EXPECT_THROW(FiniteField::from_descriptor(reducible), InvalidArgument);
}

TEST(FieldTest, CoefficientRoundTrip) {
  const auto f = FiniteField::make(3, 3);
  for (Element x = 0; x < 27; ++x) {
    const auto c = f.coefficients(x);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], x % 3);
    EXPECT_EQ(f.from_coefficients(c), x);
  }
}

TEST(FieldTest, PrimeHelpers) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(prime_factors(120), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(prime_power(343), (std::pair<std::uint32_t, std::uint32_t>{7, 3}));
  EXPECT_THROW(prime_power(12), InvalidArgument);
}

}  // namespace
}  // namespace sepcode
