#include <gtest/gtest.h>

#include <random>

#include "weylchar/errors.hpp"
#include "weylchar/factorization.hpp"

using namespace weylchar;

namespace {
IndexedMatrix random_unitriangular(int n, const ShapeBound& bound, std::mt19937_64& rng) {
  auto m = identity_indexed(n, bound);
  std::uniform_int_distribution<int> dist(-40, 40);
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (std::size_t j = i + 1; j < m.dimension(); ++j) m.values(i, j) = BigInt(dist(rng)) << 70;
  return m;
}
}  // namespace

TEST(Factorization, IdentityDbarGivesB) {
  for (int n = 0; n <= 4; ++n) {
    const auto bound = ShapeBound::uniform(2, n);
    auto b = to_indexed(build_beta_matrix(n, bound));
    auto d = derive_decomposition(b, identity_indexed(n, bound));
    EXPECT_EQ(d.values, b.values);
    auto report = factorization_harness(b, identity_indexed(n, bound), identity_indexed(n, bound), b);
    EXPECT_TRUE(report.holds());
    EXPECT_TRUE(report.warnings.empty());
    EXPECT_TRUE(report.block_mismatches.empty());
  }
}

TEST(Factorization, TrivialBKeepsDbar) {
  std::mt19937_64 rng(7);
  const auto bound = ShapeBound::uniform(1, 4);
  auto b = to_indexed(build_beta_matrix(4, bound));
  auto dbar = random_unitriangular(4, bound, rng);
  EXPECT_EQ(derive_decomposition(b, dbar).values, dbar.values);
}

TEST(Factorization, RandomDbarHasZeroResidual) {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 4; ++n) {
    const auto bound = ShapeBound::uniform(2, n);
    auto b = to_indexed(build_beta_matrix(n, bound));
    auto dbar = random_unitriangular(n, bound, rng);
    auto d = derive_decomposition(b, dbar);
    auto report = factorization_harness(b, dbar, identity_indexed(n, bound), d);
    EXPECT_EQ(report.residual, 0);
    EXPECT_TRUE(report.block_mismatches.empty());
  }
}

TEST(Factorization, ResidualWarningsAndMismatches) {
  const auto bound = ShapeBound::uniform(2, 2);
  auto b = to_indexed(build_beta_matrix(2, bound));
  auto id = identity_indexed(2, bound);
  auto d = b;
  d.values(0, 1) = BigInt(5);  // same zeta block as (0, 0)
  d.values(3, 0) = BigInt(-7);
  auto report = factorization_harness(b, id, id, d);
  EXPECT_EQ(report.residual, 7);
  EXPECT_FALSE(report.holds());
  ASSERT_EQ(report.warnings.size(), 1u);
  EXPECT_NE(report.warnings[0].find("D"), std::string::npos);
  EXPECT_FALSE(report.block_mismatches.empty());
}

TEST(Factorization, IndexMismatchIsRejected) {
  auto a = identity_indexed(2, ShapeBound::uniform(2, 2));
  auto b = identity_indexed(3, ShapeBound::uniform(2, 3));
  EXPECT_THROW(derive_decomposition(a, b), InputError);
  auto c = identity_indexed(2, ShapeBound({3, 2}));
  EXPECT_THROW(factorization_harness(a, a, a, c), InputError);
}
