#include <algorithm>

#include "rq/arith.hpp"
#include "rq/covalency.hpp"
#include "rq/kernels.hpp"
#include "rq/prime_families.hpp"
#include "rq/spectrum.hpp"

namespace rq::kernels::serial {

CovalencyScan scan_covalency(OrderParam m, int l, Family family) {
  CovalencyScan out;
  FamilyStream stream(m, l, family);
  while (auto s = stream.next()) {
    ++out.subsets;
    if (!is_ramanujan(*s)) ++out.non_ramanujan;
  }
  return out;
}

FamilyCount count_family_primes(int r, std::int64_t c, std::uint64_t x_max, std::int64_t k_min) {
  const PrimeFamily fam{r, c};
  FamilyCount out;
  for (std::int64_t k = std::max<std::int64_t>(k_min, 0);; ++k) {
    const auto v = fam.value_at(k);
    if (!v || *v > x_max) break;
    if (!is_prime(*v)) continue;
    if (fam.in_interval(k)) {
      ++out.primes;
    } else {
      ++out.outside_interval;
    }
  }
  return out;
}

std::vector<ClassifiedPrime> classify_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<ClassifiedPrime> out;
  lo = std::max(lo, kMinClassifiedPrime);
  if (hi < lo) return out;
  for (std::uint64_t p : primes_up_to(hi)) {
    if (p < lo) continue;
    out.push_back({p, is_exceptional_spectral(p).exceptional(), is_exceptional_arithmetic(p).exceptional()});
  }
  return out;
}

}  // namespace rq::kernels::serial
