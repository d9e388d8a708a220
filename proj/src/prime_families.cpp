#include "rq/prime_families.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rq/arith.hpp"
#include "rq/kernels.hpp"

namespace rq {

namespace {

void check_residue(int r) {
  if (r < 0 || r > 23) throw std::invalid_argument("residue r must lie in [0, 23]");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool in_admissible(int r, std::int64_t c) {
  const auto cc = candidate_constants(r);
  return std::find(cc.admissible.begin(), cc.admissible.end(), c) != cc.admissible.end();
}

void require_admissible(int r, std::int64_t c) {
  check_residue(r);
  if (!in_admissible(r, c)) {
    throw std::invalid_argument("c = " + std::to_string(c) + " is not in C'_" + std::to_string(r));
  }
}

struct ThresholdTable {
  // Indexed like exceptional_families().
  std::vector<std::int64_t> consistent;
  std::vector<std::int64_t> published;
};

const ThresholdTable& cached_thresholds() {
  static const ThresholdTable table = [] {
    ThresholdTable t;
    for (const auto& f : exceptional_families()) {
      t.consistent.push_back(derive_k_threshold(f.r, f.c, DeltaConvention::kConsistent));
      t.published.push_back(derive_k_threshold(f.r, f.c, DeltaConvention::kPublished));
    }
    return t;
  }();
  return table;
}

std::int64_t cached_threshold(int r, std::int64_t c, DeltaConvention convention) {
  const auto& fams = exceptional_families();
  const auto it = std::find(fams.begin(), fams.end(), PrimeFamily{r, c});
  if (it == fams.end()) throw std::invalid_argument("not one of the 54 families");
  const auto i = static_cast<std::size_t>(it - fams.begin());
  const auto& t = cached_thresholds();
  return convention == DeltaConvention::kConsistent ? t.consistent[i] : t.published[i];
}

}  // namespace

std::optional<std::uint64_t> PrimeFamily::value_at(std::int64_t k) const {
  const int128_t kk = k;
  const int128_t v = 36 * kk * kk + b() * kk + c;
  if (v < 0 || v > static_cast<int128_t>(INT64_MAX)) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

bool PrimeFamily::in_interval(std::int64_t k) const {
  const auto v = value_at(k);
  if (!v || *v == 0) return false;
  return trivial_bound(static_cast<std::int64_t>(*v)) == 24 * k + r;
}

CandidateConstants candidate_constants(int r) {
  check_residue(r);
  CandidateConstants out;
  const std::int64_t s = r + 3;
  const std::int64_t base = floor_div(s * s, 16);
  for (std::int64_t d = -5; d <= 0; ++d) {
    const std::int64_t c = base + d;
    out.all.push_back(c);
    // Irreducible over Z: primitive and with a non-square discriminant.
    const std::int64_t content = std::gcd(std::gcd(std::int64_t{36}, 3 * s), c);
    if (content == 1 && !is_perfect_square(s * s - 16 * c)) out.admissible.push_back(c);
  }
  return out;
}

const std::vector<PrimeFamily>& exceptional_families() {
  static const std::vector<PrimeFamily> families = [] {
    std::vector<PrimeFamily> out;
    for (int r = 0; r < 24; ++r) {
      for (auto c : candidate_constants(r).admissible) out.push_back({r, c});
    }
    return out;
  }();
  return families;
}

bool hardy_littlewood_admissible(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a <= 0) return false;
  if (std::gcd(std::gcd(a, b), c) != 1) return false;
  if ((a + b) % 2 == 0 && c % 2 == 0) return false;
  const int128_t disc = static_cast<int128_t>(b) * b - static_cast<int128_t>(4) * a * c;
  if (disc < 0) return true;
  if (disc > static_cast<int128_t>(INT64_MAX)) throw std::overflow_error("discriminant exceeds 63 bits");
  return !is_perfect_square(static_cast<std::int64_t>(disc));
}

std::int64_t derive_k_threshold(int r, std::int64_t c, DeltaConvention convention) {
  require_admissible(r, c);
  const PrimeFamily fam{r, c};
  std::vector<bool> holds(static_cast<std::size_t>(kThresholdHorizon) + 1, false);
  for (std::int64_t k = 1; k <= kThresholdHorizon; ++k) {
    const std::uint64_t t = *fam.value_at(k);
    const bool negative = interpolation_F_extended(r, c, k, convention) < 0;
    bool ok;
    if (convention == DeltaConvention::kConsistent) {
      ok = negative && t >= kMinClassifiedPrime;
    } else {
      ok = negative && !(t < kMinClassifiedPrime && is_prime(t));
    }
    holds[static_cast<std::size_t>(k)] = ok;
  }
  std::int64_t tail = kThresholdHorizon + 1;
  while (tail > 1 && holds[static_cast<std::size_t>(tail - 1)]) --tail;
  if (tail > kThresholdHorizon) {
    throw std::logic_error("F_r never settles below zero for (" + std::to_string(r) + ", " +
                           std::to_string(c) + ") within the horizon");
  }
  if (convention == DeltaConvention::kConsistent) {
    const auto first = std::find(holds.begin() + 1, holds.end(), true) - holds.begin();
    if (first != tail) {
      throw std::logic_error("threshold condition for (" + std::to_string(r) + ", " +
                             std::to_string(c) + ") holds at k = " + std::to_string(first) +
                             " but fails again before k = " + std::to_string(tail));
    }
  }
  return tail;
}

Decomposition decompose(std::uint64_t p) {
  if (p == 0 || p > static_cast<std::uint64_t>(INT64_MAX)) throw std::invalid_argument("p out of range");
  Decomposition d;
  d.l0 = trivial_bound(static_cast<std::int64_t>(p));
  if (d.l0 < 0) throw std::invalid_argument("p too small to decompose");
  d.k = d.l0 / 24;
  d.r = static_cast<int>(d.l0 % 24);
  d.c = static_cast<std::int64_t>(p) - 36 * d.k * d.k - 3 * (d.r + 3) * d.k;
  return d;
}

ExceptionalVerdict is_exceptional_arithmetic(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  ExceptionalVerdict v;
  v.p = p;
  v.route = Route::kArithmetic;
  v.l0 = trivial_bound(static_cast<std::int64_t>(p));
  if (p < kMinClassifiedPrime) return v;
  const Decomposition d = decompose(p);
  ArithmeticWitness w{d.r, d.c, d.k, in_admissible(d.r, d.c), std::nullopt};
  bool exceptional = false;
  if (w.c_in_family) {
    w.k_threshold = cached_threshold(d.r, d.c, DeltaConvention::kConsistent);
    exceptional = d.k >= *w.k_threshold;
  }
  v.arithmetic = w;
  v.status = exceptional ? VerdictStatus::kExceptional : VerdictStatus::kOrdinary;
  return v;
}

FamilyReport enumerate_family_primes(int r, std::int64_t c, std::uint64_t x_max, std::int64_t k_min,
                                     std::size_t listed) {
  check_residue(r);
  if (x_max > (std::uint64_t{1} << 63)) throw std::invalid_argument("x_max must not exceed 2^63");
  if (k_min < 0) throw std::invalid_argument("k_min must be >= 0");
  FamilyReport rep;
  rep.family = {r, c};
  rep.k_min = k_min;
  for (std::int64_t k = k_min; rep.first_primes.size() < listed; ++k) {
    const auto v = rep.family.value_at(k);
    if (!v || *v > x_max) break;
    if (is_prime(*v) && rep.family.in_interval(k)) rep.first_primes.push_back(*v);
  }
  const FamilyCount n = kernels::omp::count_family_primes(r, c, x_max, k_min);
  rep.count = n.primes;
  rep.outside_interval = n.outside_interval;
  return rep;
}

double hl_constant(std::int64_t reduced_discriminant, std::span<const std::uint64_t> primes) {
  long double product = 1.0L;
  for (std::uint64_t p : primes) {
    if (p < 5) continue;
    const int chi = jacobi(reduced_discriminant, p);
    product *= 1.0L - static_cast<long double>(chi) / static_cast<long double>(p - 1);
  }
  return static_cast<double>(product);
}

double hl_constant(int r, std::int64_t c, std::uint64_t prime_bound) {
  check_residue(r);
  if (prime_bound < kMinPrimeBound) throw std::invalid_argument("prime_bound must be >= 1000");
  const auto primes = primes_up_to(prime_bound);
  return hl_constant(PrimeFamily{r, c}.discriminant_reduced(), primes);
}

int hl_delta(int r) {
  check_residue(r);
  return r % 2 == 0 ? 2 : 1;
}

double hl_density(int r, std::int64_t c, std::uint64_t prime_bound) {
  return hl_constant(r, c, prime_bound) / (2.0 * hl_delta(r));
}

}  // namespace rq
