#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "../support/oracles.hpp"
#include "rq/dense_oracle.hpp"
#include "rq/spectrum.hpp"

using namespace rq;

TEST(Jacobi, SmallMatrices) {
  SymmetricMatrix d(2);
  d(0, 0) = 1;
  d(1, 1) = 3;
  EXPECT_EQ(symmetric_eigenvalues(d), (std::vector<double>{3, 1}));

  SymmetricMatrix j(12);
  for (std::size_t a = 0; a < 12; ++a) {
    for (std::size_t b = 0; b < 12; ++b) j(a, b) = a == b ? 0.0 : 1.0;
  }
  const auto ev = symmetric_eigenvalues(j);
  EXPECT_NEAR(ev[0], 11.0, 1e-10);
  for (std::size_t i = 1; i < 12; ++i) EXPECT_NEAR(ev[i], -1.0, 1e-10);
}

// Path graph P_n: eigenvalues 2 cos(pi k / (n + 1)).
TEST(Jacobi, PathGraph) {
  const std::size_t n = 40;
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = 1.0;
  const auto ev = symmetric_eigenvalues(a);
  for (std::size_t k = 1; k <= n; ++k) {
    EXPECT_NEAR(ev[k - 1], 2 * std::cos(std::numbers::pi * k / (n + 1)), 1e-10);
  }
}

TEST(Jacobi, RejectsAsymmetric) {
  SymmetricMatrix a(2);
  a(0, 1) = 1.0;
  EXPECT_THROW(symmetric_eigenvalues(a), std::invalid_argument);
}

TEST(Jacobi, PermutationInvariant) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 30;
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(rng);
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  SymmetricMatrix b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(perm[i], perm[j]);
  }
  EXPECT_LE(rq::testing::max_abs_diff(symmetric_eigenvalues(a), symmetric_eigenvalues(b)), 1e-10);
}

TEST(Adjacency, CompleteAndCocktail) {
  const auto a = adjacency_matrix(CayleySubset::complete(OrderParam(3)));
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = 0; j < 12; ++j) EXPECT_EQ(a(i, j), i == j ? 0.0 : 1.0);
  }
  const OrderParam m(3);
  const auto c = adjacency_matrix(CayleySubset::from_masks(m, 0b11, 0, 0b111));
  for (auto g : all_elements(m)) {
    for (auto h : all_elements(m)) {
      const bool antipodal = multiply(inverse(g, m), h, m) == Element{3, 0};
      EXPECT_EQ(c(index_of(g, m), index_of(h, m)) == 0.0, g == h || antipodal);
    }
  }
  const auto ev = symmetric_eigenvalues(c);
  EXPECT_NEAR(ev[0], 10.0, 1e-10);
  for (std::size_t i = 1; i <= 6; ++i) EXPECT_NEAR(ev[i], 0.0, 1e-10);
  for (std::size_t i = 7; i < 12; ++i) EXPECT_NEAR(ev[i], -2.0, 1e-10);
}

TEST(Adjacency, RegularAndSymmetric) {
  std::mt19937_64 rng(2);
  for (int mm = 1; mm <= 12; ++mm) {
    const auto s = rq::testing::random_subset(OrderParam(mm), Family::kS, rng);
    const auto a = adjacency_matrix(s);
    EXPECT_TRUE(a.is_symmetric());
    for (std::size_t i = 0; i < a.size(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < a.size(); ++j) row += a(i, j);
      EXPECT_EQ(row, s.size());
    }
    const auto ev = symmetric_eigenvalues(a);
    double sum = 0.0, sq = 0.0;
    for (double v : ev) {
      sum += v;
      sq += v * v;
    }
    EXPECT_NEAR(sum, 0.0, 1e-8);
    EXPECT_NEAR(sq, 4.0 * mm * s.size(), 1e-7);
  }
  EXPECT_THROW(adjacency_matrix(CayleySubset::complete(OrderParam(1025))), std::invalid_argument);
}

TEST(SpectraMatch, ExtremalExample) {
  const auto s = CayleySubset::from_masks(OrderParam(5), 0b1111, 1, 0b01111);
  EXPECT_EQ(s.profile().l, 3);
  EXPECT_TRUE(spectra_match(s));
  EXPECT_LE(spectra_max_deviation(s), 1e-9);
  const auto e = extremal_subset(OrderParam(5), 1, 2);
  const auto dense = symmetric_eigenvalues(adjacency_matrix(e));
  double lam = 0.0;
  for (double v : dense) {
    if (std::fabs(std::fabs(v) - e.size()) > 1e-9) lam = std::max(lam, std::fabs(v));
  }
  EXPECT_NEAR(lambda_max_nontrivial(e), lam, 1e-9);
}
