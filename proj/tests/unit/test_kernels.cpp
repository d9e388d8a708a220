#include <gtest/gtest.h>

#include "rq/kernels.hpp"
#include "rq/prime_families.hpp"

using namespace rq;

namespace {

class ThreadGuard {
 public:
  explicit ThreadGuard(int n) { set_thread_count(n); }
  ~ThreadGuard() { set_thread_count(0); }
};

}  // namespace

TEST(Kernels, ThreadCountSetting) {
  {
    ThreadGuard g(3);
    EXPECT_EQ(thread_count(), 3);
  }
  EXPECT_GE(thread_count(), 1);
}

TEST(Kernels, ScanCovalencyAgrees) {
  for (int threads : {1, 2, 4}) {
    ThreadGuard g(threads);
    for (int m = 2; m <= 8; ++m) {
      for (int l = 1; l < 4 * m - 1; ++l) {
        for (Family f : {Family::kS, Family::kSPrime}) {
          const auto a = kernels::serial::scan_covalency(OrderParam(m), l, f);
          const auto b = kernels::omp::scan_covalency(OrderParam(m), l, f);
          EXPECT_EQ(a.subsets, b.subsets) << m << " " << l;
          EXPECT_EQ(a.non_ramanujan, b.non_ramanujan) << m << " " << l;
        }
      }
    }
  }
}

TEST(Kernels, CountFamilyPrimesAgrees) {
  for (int threads : {1, 3}) {
    ThreadGuard g(threads);
    for (const auto& f : exceptional_families()) {
      const auto a = kernels::serial::count_family_primes(f.r, f.c, 50'000'000, 1);
      const auto b = kernels::omp::count_family_primes(f.r, f.c, 50'000'000, 1);
      EXPECT_EQ(a.primes, b.primes);
      EXPECT_EQ(a.outside_interval, b.outside_interval);
    }
  }
}

TEST(Kernels, CountFamilyPrimesEdges) {
  EXPECT_EQ(kernels::omp::count_family_primes(0, -5, 100, 1).primes, 0u);
  EXPECT_EQ(kernels::serial::count_family_primes(9, 7, 79, 1).primes, 1u);
  EXPECT_EQ(kernels::omp::count_family_primes(9, 7, 79, 1).primes, 1u);
  EXPECT_EQ(kernels::omp::count_family_primes(9, 7, 78, 1).primes, 0u);
}

TEST(Kernels, ClassifyPrimesAgrees) {
  const auto a = kernels::serial::classify_primes(0, 30000);
  for (int threads : {1, 2, 4}) {
    ThreadGuard g(threads);
    const auto b = kernels::omp::classify_primes(0, 30000);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].p, b[i].p);
      EXPECT_EQ(a[i].spectral, b[i].spectral);
      EXPECT_EQ(a[i].arithmetic, b[i].arithmetic);
    }
  }
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a.front().p, 67u);
  EXPECT_TRUE(a.front().spectral);
}
