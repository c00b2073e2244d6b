#include "falg/hamel.hpp"
#include "falg/random.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace falg;
using namespace falg::testing;

namespace {
constexpr int kTrials = 1000;
constexpr BasisIndex kRange = 12;
}  // namespace

TEST(Vector, ZeroFreeConstruction) {
  Vector v(Q, {{0, q(1)}, {3, q(0)}, {5, q(2)}});
  EXPECT_EQ(v.support_size(), 2u);
  EXPECT_TRUE(v.well_formed());
  EXPECT_EQ(v.coord(3), q(0));
  EXPECT_THROW(Vector(Q, {{0, embed_int(Backend::Integer, 1)}}), BackendMismatch);
}

TEST(Vector, AddExamples) {
  EXPECT_EQ(vec({{0, 1}, {1, 2}}) + vec({{1, -2}, {5, 3}}), vec({{0, 1}, {5, 3}}));
  auto v = vec({{2, 4}, {7, -1}});
  EXPECT_EQ(v + Vector(Q), v);
  EXPECT_EQ(vec({{0, 1}}) + vec({{0, 1}}), vec({{0, 2}}));
  EXPECT_THROW(v + Vector(Backend::Integer), BackendMismatch);
}

TEST(Vector, ScaleExamples) {
  EXPECT_TRUE(scale(q(0), vec({{0, 1}, {3, 7}})).is_zero());
  auto v = vec({{1, 3}, {4, -2}});
  EXPECT_EQ(scale(q(1), v), v);
  EXPECT_EQ(scale(q(2), vec({{0, 1}, {1, 3}})), vec({{0, 2}, {1, 6}}));
  EXPECT_THROW(scale(Scalar(2.0), v), BackendMismatch);
}

TEST(Dual, EvalExamples) {
  auto v = vec({{0, 5}, {1, 7}});
  EXPECT_EQ(dual_eval(Functional::dual_basis(Q, 1), v), q(7));
  EXPECT_EQ(dual_eval(Functional::dual_basis(Q, 2), v), q(0));
  EXPECT_EQ(dual_eval(Functional(vec({{0, 2}, {1, 3}})), vec({{0, 1}, {1, 1}})), q(5));
}

TEST(Dual, BasisExtractsCoordinates) {
  Rng rng(21);
  for (int n = 0; n < kTrials; ++n) {
    auto v = rng.vector(Q, kRange, 6);
    for (BasisIndex i = 0; i < kRange + 3; ++i) EXPECT_EQ(dual_eval(Functional::dual_basis(Q, i), v), v.coord(i));
  }
}

TEST(LinearMap, ApplyExamples) {
  EXPECT_EQ(apply(shift_map(10), vec({{0, 1}, {1, 2}})), vec({{1, 1}, {2, 2}}));
  Rng rng(22);
  auto f = rng.linear_map(Q, kRange, 6);
  for (BasisIndex j = 0; j < kRange; ++j) EXPECT_EQ(apply(f, e(j)), f.column(j));
  EXPECT_TRUE(apply(f, Vector(Q)).is_zero());
}

TEST(LinearMap, AddExamples) {
  auto f = shift_map(5);
  EXPECT_EQ(add(f, LinearMap(Q)), f);
  EXPECT_TRUE(add(f, scale(q(-1), f)).is_zero());
  auto doubled = add(shift_map(5), shift_map(5));
  for (BasisIndex j = 0; j < 5; ++j) EXPECT_EQ(doubled.column(j), vec({{j + 1, 2}}));
}

TEST(LinearMap, ScaleExamples) {
  auto f = shift_map(5);
  EXPECT_EQ(scale(q(1), f), f);
  EXPECT_TRUE(scale(q(0), f).is_zero());
  auto tripled = scale(q(3), f);
  for (BasisIndex j = 0; j < 5; ++j) EXPECT_EQ(tripled.column(j), vec({{j + 1, 3}}));
}

TEST(LinearMap, ComposeExamples) {
  Rng rng(23);
  auto f = rng.linear_map(Q, kRange, 6);
  EXPECT_EQ(compose(f, LinearMap::identity(Q, kRange)), f);
  EXPECT_EQ(apply(compose(shift_map(10), shift_map(10)), e(0)), e(2));
  EXPECT_TRUE(compose(LinearMap(Q), f).is_zero());
}

TEST(LinearMap, BasisMapExamples) {
  EXPECT_EQ(apply(basis_map(Q, 2, 0), vec({{0, 5}})), vec({{2, 5}}));
  EXPECT_TRUE(apply(basis_map(Q, 3, 1), e(4)).is_zero());
  // f = sum_{i,j} f^i_j E_ij
  Rng rng(24);
  for (int n = 0; n < 100; ++n) {
    auto f = rng.linear_map(Q, kRange, 5);
    LinearMap rebuilt(Q);
    for (const auto& [j, col] : f.columns())
      for (const auto& [i, c] : col.coords()) rebuilt = add(rebuilt, scale(c, basis_map(Q, i, j)));
    EXPECT_EQ(rebuilt, f);
  }
}

TEST(LinearMap, Linearity) {
  Rng rng(25);
  for (int n = 0; n < kTrials; ++n) {
    auto f = rng.linear_map(Q, kRange);
    auto u = rng.vector(Q, kRange), v = rng.vector(Q, kRange);
    auto d = rng.scalar(Q);
    EXPECT_EQ(apply(f, u + v), apply(f, u) + apply(f, v));
    EXPECT_EQ(apply(f, d * v), d * apply(f, v));
    EXPECT_EQ(apply(f, v), apply_oracle(f, v));
  }
}

TEST(LinearMap, ModuleStructure) {
  Rng rng(26);
  for (int n = 0; n < kTrials; ++n) {
    auto f = rng.linear_map(Q, kRange), g = rng.linear_map(Q, kRange);
    auto v = rng.vector(Q, kRange);
    auto d = rng.scalar(Q);
    EXPECT_EQ(apply(add(f, g), v), apply(f, v) + apply(g, v));
    EXPECT_EQ(apply(scale(d, f), v), d * apply(f, v));
    EXPECT_EQ(apply(compose(f, g), v), apply(f, apply(g, v)));
    EXPECT_TRUE(add(f, g).well_formed());
    EXPECT_TRUE(compose(f, g).well_formed());
  }
}

TEST(LinearMap, CompositionAssociative) {
  Rng rng(27);
  for (int n = 0; n < 300; ++n) {
    auto f = rng.linear_map(Q, kRange), g = rng.linear_map(Q, kRange), h = rng.linear_map(Q, kRange);
    auto lhs = compose(compose(f, g), h), rhs = compose(f, compose(g, h));
    EXPECT_EQ(lhs, rhs);
    for (BasisIndex j = 0; j < kRange; ++j) EXPECT_EQ(apply(lhs, e(j)), apply(rhs, e(j)));
  }
}

TEST(Vector, ModuleAxioms) {
  Rng rng(28);
  for (int n = 0; n < kTrials; ++n) {
    auto u = rng.vector(Q, kRange), v = rng.vector(Q, kRange), w = rng.vector(Q, kRange);
    auto a = rng.scalar(Q), b = rng.scalar(Q);
    EXPECT_EQ((u + v) + w, u + (v + w));
    EXPECT_EQ(u + v, v + u);
    EXPECT_TRUE((u + -u).is_zero());
    EXPECT_EQ(a * (b * v), (a * b) * v);
    EXPECT_EQ(a * (u + v), a * u + a * v);
    EXPECT_EQ((a + b) * v, a * v + b * v);
    EXPECT_EQ(Scalar::one(Q) * v, v);
    EXPECT_TRUE((a * (u + v)).well_formed());
  }
}

TEST(PolyMap, Examples) {
  Rng rng(29);
  auto f = rng.linear_map(Q, kRange, 5);
  auto v = rng.vector(Q, kRange);
  std::vector<Vector> one{v};
  EXPECT_EQ(poly_apply(PolyMap(f), one), apply(f, v));

  PolyMap h(2, Q, {{0, PolyMap(LinearMap::identity(Q, kRange))}});
  std::vector<Vector> args{e(0), v};
  EXPECT_EQ(poly_apply(h, args), v);

  auto g = rng.poly_map(Q, 3, kRange);
  std::vector<Vector> with_zero{rng.vector(Q, kRange), Vector(Q), rng.vector(Q, kRange)};
  EXPECT_TRUE(poly_apply(g, with_zero).is_zero());

  std::vector<Vector> too_few{v};
  EXPECT_THROW(poly_apply(h, too_few), DomainError);
}

TEST(PolyMap, Polylinearity) {
  Rng rng(30);
  for (int n = 0; n < 500; ++n) {
    std::size_t arity = 2 + rng.below(2);
    auto f = rng.poly_map(Q, arity, kRange);
    std::vector<Vector> xs;
    for (std::size_t s = 0; s < arity; ++s) xs.push_back(rng.vector(Q, kRange));
    auto slot = rng.below(arity);
    auto u = rng.vector(Q, kRange);
    auto d = rng.scalar(Q);

    auto base = poly_apply(f, xs);
    auto with_u = xs, with_sum = xs, with_scaled = xs;
    with_u[slot] = u;
    with_sum[slot] = xs[slot] + u;
    with_scaled[slot] = d * xs[slot];
    EXPECT_EQ(poly_apply(f, with_sum), base + poly_apply(f, with_u));
    EXPECT_EQ(poly_apply(f, with_scaled), d * base);
  }
}

TEST(PolyMap, PeelMatchesSliceExpansion) {
  Rng rng(31);
  for (int n = 0; n < 200; ++n) {
    auto f = rng.poly_map(Q, 2, kRange);
    auto x = rng.vector(Q, kRange);
    LinearMap expected(Q);
    for (const auto& [j, xj] : x.coords()) expected = add(expected, scale(xj, f.slice(j).leaf()));
    EXPECT_EQ(f.peel(x).leaf(), expected);
  }
}
