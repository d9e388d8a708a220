#include <omp.h>

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rq/arith.hpp"
#include "rq/covalency.hpp"
#include "rq/kernels.hpp"
#include "rq/prime_families.hpp"
#include "rq/spectrum.hpp"

namespace rq {

namespace {
int g_threads = 0;
}

void set_thread_count(int n) { g_threads = n > 0 ? n : 0; }

int thread_count() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

namespace kernels::omp {

CovalencyScan scan_covalency(OrderParam m, int l, Family family) {
  const int mm = m.value();
  if (mm > 32) throw std::invalid_argument("family enumeration requires m <= 32");
  if (l < 1 || l >= m.group_order()) return {};
  const auto pair_limit = static_cast<std::int64_t>(std::uint64_t{1} << (mm - 1));
  const std::uint64_t ypair_limit = std::uint64_t{1} << mm;
  std::int64_t subsets = 0;
  std::int64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : subsets, bad) num_threads(thread_count())
  for (std::int64_t pm = 0; pm < pair_limit; ++pm) {
    const auto pair_mask = static_cast<std::uint64_t>(pm);
    const int pc = std::popcount(pair_mask);
    for (int delta = 0; delta <= 1; ++delta) {
      const int l1 = 2 * mm - 2 * pc - delta;
      const int l2 = l - l1;
      if (!admissible_split(m, l1, l2, family)) continue;
      const int ypc = (2 * mm - l2) / 2;
      std::uint64_t ym = ypc == 0 ? 0 : (std::uint64_t{1} << ypc) - 1;
      while (ym < ypair_limit) {
        const auto s = CayleySubset::from_masks(m, pair_mask, delta, ym);
        if (s.generates()) {
          ++subsets;
          if (!is_ramanujan(s)) ++bad;
        }
        if (ym == 0) break;
        ym = next_same_popcount(ym);
      }
    }
  }
  return {subsets, bad};
}

FamilyCount count_family_primes(int r, std::int64_t c, std::uint64_t x_max, std::int64_t k_min) {
  const PrimeFamily fam{r, c};
  const std::int64_t k0 = std::max<std::int64_t>(k_min, 0);
  // Last k with f(k) <= x_max; f is increasing for k >= 0 since b > 0.
  std::int64_t k_end = k0;
  {
    const std::int64_t guess = static_cast<std::int64_t>(isqrt(x_max / 36)) + 2;
    k_end = std::max(k0, guess);
    while (k_end >= k0) {
      const auto v = fam.value_at(k_end);
      if (v && *v <= x_max) break;
      --k_end;
    }
  }
  std::uint64_t primes = 0;
  std::uint64_t outside = 0;
#pragma omp parallel for schedule(static, 1024) reduction(+ : primes, outside) num_threads(thread_count())
  for (std::int64_t k = k0; k <= k_end; ++k) {
    const std::uint64_t v = *fam.value_at(k);
    if (!is_prime(v)) continue;
    if (fam.in_interval(k)) {
      ++primes;
    } else {
      ++outside;
    }
  }
  return {primes, outside};
}

std::vector<ClassifiedPrime> classify_primes(std::uint64_t lo, std::uint64_t hi) {
  lo = std::max(lo, kMinClassifiedPrime);
  if (hi < lo) return {};
  auto all = primes_up_to(hi);
  all.erase(all.begin(), std::lower_bound(all.begin(), all.end(), lo));
  std::vector<ClassifiedPrime> out(all.size());
  if (all.empty()) return out;
  // Builds the threshold cache outside the parallel region, where a throw can propagate.
  is_exceptional_arithmetic(all.front());
  const auto n = static_cast<std::int64_t>(all.size());
#pragma omp parallel for schedule(dynamic, 256) num_threads(thread_count())
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint64_t p = all[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = {p, is_exceptional_spectral(p).exceptional(),
                                        is_exceptional_arithmetic(p).exceptional()};
  }
  return out;
}

}  // namespace kernels::omp

}  // namespace rq
