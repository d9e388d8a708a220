#pragma once

// Quadratic families f_{r,c}(k) = 36k^2 + 3(r+3)k + c.
//
// For a prime p with l0 = trivial_bound(p) = 24k + r, p is exceptional iff
// p = f_{r,c}(k) for some c in C'_r and k >= k_{r,c}. The interval
// I_{r,k} = { t : floor(4 sqrt(t)) - 2 = 24k + r } is enforced explicitly.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rq/covalency.hpp"

namespace rq {

inline constexpr std::int64_t kThresholdHorizon = 10000;
inline constexpr std::uint64_t kDefaultPrimeBound = 10'000'000;
inline constexpr std::uint64_t kMinPrimeBound = 1000;

struct PrimeFamily {
  int r = 0;
  std::int64_t c = 0;

  std::int64_t b() const { return 3 * (r + 3); }
  // (r+3)^2 - 16c; the full discriminant is 9 times this.
  std::int64_t discriminant_reduced() const { return std::int64_t{r + 3} * (r + 3) - 16 * c; }
  // nullopt when f(k) is negative or does not fit in 63 bits.
  std::optional<std::uint64_t> value_at(std::int64_t k) const;
  // trivial_bound(f(k)) == 24k + r.
  bool in_interval(std::int64_t k) const;

  friend bool operator==(const PrimeFamily&, const PrimeFamily&) = default;
};

struct CandidateConstants {
  std::vector<std::int64_t> all;        // C_r, six consecutive values
  std::vector<std::int64_t> admissible;  // C'_r: f_{r,c} irreducible over Z
};

CandidateConstants candidate_constants(int r);

// The 54 families (r, c in C'_r), ordered by r then c.
const std::vector<PrimeFamily>& exceptional_families();

bool hardy_littlewood_admissible(std::int64_t a, std::int64_t b, std::int64_t c);

// k_{r,c}. Under kConsistent: the smallest k >= 1 with f(k) >= 67 and F_r < 0.
// Under kPublished: the smallest k from which F_r < 0 and f(k) is not a prime
// below 67, for every larger k. Either way the condition is checked up to
// kThresholdHorizon and a violation throws std::logic_error.
std::int64_t derive_k_threshold(int r, std::int64_t c,
                                DeltaConvention convention = DeltaConvention::kConsistent);

struct Decomposition {
  std::int64_t l0 = 0;
  int r = 0;
  std::int64_t k = 0;
  std::int64_t c = 0;
};

// l0 = 24k + r and c = p - 36k^2 - 3(r+3)k.
Decomposition decompose(std::uint64_t p);

// p must be an odd prime; p < 67 yields kOutOfScope. Uses consistent thresholds.
ExceptionalVerdict is_exceptional_arithmetic(std::uint64_t p);

struct FamilyReport {
  PrimeFamily family;
  std::int64_t k_min = 0;
  std::vector<std::uint64_t> first_primes;
  std::uint64_t count = 0;
  std::uint64_t outside_interval = 0;  // prime f(k) <= x_max that miss I_{r,k}
  std::optional<double> hl_constant;
  std::optional<double> hl_density;
};

// Primes f(k) <= x_max with k >= k_min and f(k) in I_{r,k}.
FamilyReport enumerate_family_primes(int r, std::int64_t c, std::uint64_t x_max, std::int64_t k_min,
                                     std::size_t listed = 5);

// prod over 5 <= p <= prime_bound of 1 - (D/p)/(p-1), D the reduced discriminant.
double hl_constant(int r, std::int64_t c, std::uint64_t prime_bound = kDefaultPrimeBound);
// Same product over a caller-supplied ascending prime list (entries < 5 skipped).
double hl_constant(std::int64_t reduced_discriminant, std::span<const std::uint64_t> primes);

// 2 for even r, 1 for odd r.
int hl_delta(int r);
double hl_density(int r, std::int64_t c, std::uint64_t prime_bound = kDefaultPrimeBound);

}  // namespace rq
