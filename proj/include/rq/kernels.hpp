#pragma once

// Data-parallel scans. Every kernel has a serial reference (kernels::serial)
// and an OpenMP version (kernels::omp) that must return identical results
// for any thread count; the tests and the benchmark compare the two.

#include <cstdint>
#include <vector>

#include "rq/subset.hpp"

namespace rq {

// Threads used by the OpenMP kernels; n <= 0 restores the runtime default.
void set_thread_count(int n);
int thread_count();

struct CovalencyScan {
  std::int64_t subsets = 0;          // members of the family at this covalency
  std::int64_t non_ramanujan = 0;
};

struct FamilyCount {
  std::uint64_t primes = 0;          // prime f(k) inside I_{r,k}
  std::uint64_t outside_interval = 0;  // prime f(k) with l0(f(k)) != 24k + r
};

struct ClassifiedPrime {
  std::uint64_t p = 0;
  bool spectral = false;
  bool arithmetic = false;
};

namespace kernels::serial {

CovalencyScan scan_covalency(OrderParam m, int l, Family family);
FamilyCount count_family_primes(int r, std::int64_t c, std::uint64_t x_max, std::int64_t k_min);
std::vector<ClassifiedPrime> classify_primes(std::uint64_t lo, std::uint64_t hi);

}  // namespace kernels::serial

namespace kernels::omp {

CovalencyScan scan_covalency(OrderParam m, int l, Family family);
FamilyCount count_family_primes(int r, std::int64_t c, std::uint64_t x_max, std::int64_t k_min);
std::vector<ClassifiedPrime> classify_primes(std::uint64_t lo, std::uint64_t hi);

}  // namespace kernels::omp

}  // namespace rq
