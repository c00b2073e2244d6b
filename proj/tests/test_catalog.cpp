#include "falg/catalog.hpp"
#include "falg/random.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace falg;
using namespace falg::testing;

TEST(Catalog, PolynomialFixture) {
  auto f = load_builtin("polynomial");
  EXPECT_EQ(label_encode(f, "x^3"), 3u);
  EXPECT_EQ(label_encode(f, "x"), 1u);
  EXPECT_EQ(label_encode(f, "e7"), 7u);
  EXPECT_EQ(label_decode(f, 0), "1");
  EXPECT_EQ(label_decode(f, 5), "x^5");
  EXPECT_EQ(f.table.lookup(1, 2), vec({{3, 1}}));
  EXPECT_THROW(label_encode(f, "y"), LabelError);
  EXPECT_THROW(label_encode(f, "x^-1"), LabelError);
}

TEST(Catalog, FreeFixture) {
  auto f = load_builtin("free:2");
  EXPECT_EQ(label_decode(f, 4), "ab");
  std::vector<std::string> order{"1", "a", "b", "aa", "ab", "ba", "bb", "aaa"};
  for (BasisIndex i = 0; i < order.size(); ++i) {
    EXPECT_EQ(label_decode(f, i), order[i]);
    EXPECT_EQ(label_encode(f, order[i]), i);
  }
  auto a = label_encode(f, "a"), b = label_encode(f, "b");
  EXPECT_EQ(f.table.lookup(a, b), e(label_encode(f, "ab")));
  EXPECT_FALSE(commutator(f.table, e(a), e(b)).is_zero());
  EXPECT_THROW(label_encode(f, "abc"), LabelError);
  EXPECT_THROW(load_builtin("free:0"), DomainError);
  EXPECT_THROW(load_builtin("free:x"), DomainError);
}

TEST(Catalog, QuaternionFixture) {
  auto f = load_builtin("quaternion");
  auto i = label_encode(f, "i"), j = label_encode(f, "j"), k = label_encode(f, "k");
  EXPECT_EQ(f.table.lookup(i, j), e(k));
  EXPECT_EQ(f.table.lookup(j, i), -e(k));
  EXPECT_EQ(f.table.lookup(k, k), -e(0));
  EXPECT_EQ(label_decode(f, 3), "k");
  for (BasisIndex x = 0; x < 4; ++x)
    for (BasisIndex y = 0; y < 4; ++y) EXPECT_EQ(to_quat(f.table.lookup(x, y)), quat_oracle(to_quat(e(x)), to_quat(e(y))));
}

TEST(Catalog, ComplexFixture) {
  auto f = load_builtin("complex");
  EXPECT_EQ(f.table.lookup(1, 1), -e(0));
  EXPECT_EQ(label_encode(f, "i"), 1u);
}

TEST(Catalog, GroupZFixture) {
  auto f = load_builtin("group_z");
  EXPECT_EQ(label_encode(f, "g^-1"), 2u);
  EXPECT_EQ(label_encode(f, "g"), 1u);
  EXPECT_EQ(label_encode(f, "g^2"), 3u);
  EXPECT_EQ(label_decode(f, 4), "g^-2");
  EXPECT_EQ(alg_mul(f.table, e(label_encode(f, "g")), e(label_encode(f, "g^-1"))), e(0));
  EXPECT_THROW(load_builtin("nope"), DomainError);
}

TEST(Catalog, CodecsRoundTrip) {
  Rng rng(71);
  for (const char* name : {"polynomial", "free:1", "free:2", "free:3", "group_z", "quaternion", "complex"}) {
    auto f = load_builtin(name);
    for (int n = 0; n < 1000; ++n) {
      BasisIndex i = rng.below(100000);
      auto label = label_decode(f, i);
      EXPECT_EQ(label_encode(f, label), i) << name << " " << label;
      EXPECT_EQ(label_encode(f, "e" + std::to_string(i)), i);
    }
  }
}

TEST(Catalog, FixturesSatisfyClaimedLaws) {
  for (const char* name : {"polynomial", "free:1", "free:2", "free:3", "group_z", "quaternion", "complex"}) {
    auto report = check_laws(load_builtin(name).table, 100, 16, 3);
    EXPECT_TRUE(report.all_passed()) << name;
  }
  EXPECT_TRUE(load_builtin("polynomial").table.claims().commutative);
  EXPECT_TRUE(load_builtin("group_z").table.claims().commutative);
  EXPECT_TRUE(load_builtin("complex").table.claims().commutative);
  EXPECT_FALSE(load_builtin("quaternion").table.claims().commutative);
  EXPECT_FALSE(load_builtin("free:2").table.claims().commutative);
  EXPECT_TRUE(load_builtin("free:1").table.claims().commutative);
}

TEST(Catalog, PairBoundHolds) {
  Rng rng(72);
  for (const char* name : {"polynomial", "free:2", "group_z"}) {
    auto f = load_builtin(name);
    ASSERT_TRUE(f.table.pair_bound().has_value());
    for (int n = 0; n < 1000; ++n) {
      auto v = f.table.lookup(rng.below(500), rng.below(500));
      EXPECT_LE(l1_norm(v), *f.table.pair_bound()) << name;
      EXPECT_EQ(v.support_size(), 1u);
    }
  }
}

TEST(Catalog, BinomialRows) {
  auto f = load_builtin("polynomial");
  auto one_x = vec({{0, 1}, {1, 1}});
  auto power = e(0);
  std::vector<mpq_class> row{1};
  for (int n = 1; n <= 8; ++n) {
    power = alg_mul(f.table, power, one_x);
    row = convolve(row, {1, 1});
    EXPECT_EQ(dense(power), row);
  }
}

TEST(Catalog, GroupInverses) {
  auto f = load_builtin("group_z");
  for (int n = -10; n <= 10; ++n) {
    auto g = e(label_encode(f, "g^" + std::to_string(n)));
    auto inv = e(label_encode(f, "g^" + std::to_string(-n)));
    EXPECT_EQ(alg_mul(f.table, g, inv), e(0));
  }
}
