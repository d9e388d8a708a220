#pragma once

// Covalency bounds for Cayley graphs of Q_4m.
//
// l0 = floor(4 sqrt(m)) - 2 is the largest covalency for which the crude
// estimate |lambda| <= l(S) already forces the Ramanujan property. For odd
// prime m = p the maximal removable covalency over S' is l0 or l0 + 1, and
// which one is decided by |mu_2| of the extremal subset at l0 + 1.

#include <cstdint>
#include <optional>
#include <string>

#include "rq/subset.hpp"

namespace rq {

inline constexpr std::uint64_t kMinClassifiedPrime = 67;
inline constexpr int kMaxExactOrderParam = 12;

std::int64_t trivial_bound(std::int64_t m);

// Largest l such that every subset of the family with covalency in [1, l] is
// Ramanujan, by exhaustive enumeration. Requires m <= 12.
int exact_ltilde(OrderParam m, Family family);

// a_r for r = l mod 6: {a0, .., a5} = {0, 2, 4, 0, 2, -2}.
int argmax_offset(std::int64_t residue);

struct ArgmaxProfile {
  int r6 = 0;
  int a = 0;
  std::int64_t l1 = 0;
  std::int64_t l2 = 0;
};

// The split (l1, l2) of covalency l maximizing |mu_2| of S^(l1,l2).
ArgmaxProfile argmax_profile(std::int64_t l);

// |mu_2| of S^(l1,l2) in closed form, with delta = (l1 + l2) mod 2:
//   sin(pi (l1-1+delta)/m) / sin(pi/m) + (1-delta) + 2 sin(pi l2 / 2m) / sin(pi/m)
double mu2_extremal(std::int64_t m, std::int64_t l1, std::int64_t l2);
long double mu2_extremal_extended(std::int64_t m, std::int64_t l1, std::int64_t l2);

// 2 sqrt(4m - l - 1), the Ramanujan bound shared by every subset of covalency l.
double ramanujan_bound_at(std::int64_t m, std::int64_t l);

struct ExtremalGap {
  std::int64_t l = 0;
  ArgmaxProfile profile;
  double mu2 = 0.0;
  double bound = 0.0;
  double gap = 0.0;  // mu2 - bound
  bool extended_precision = false;
};

// |mu_2| - RB at the argmax split of covalency l; margins under 1e-6 are
// recomputed in long double.
ExtremalGap extremal_gap(std::int64_t m, std::int64_t l);

// lambda(l0 + 1) for an odd prime p >= 67.
double lambda_at_l0_plus_1(std::uint64_t p);

enum class Route { kSpectral, kArithmetic };
enum class VerdictStatus { kExceptional, kOrdinary, kOutOfScope };

struct SpectralWitness {
  std::int64_t l1 = 0;
  std::int64_t l2 = 0;
  double mu2 = 0.0;
  double bound = 0.0;
  bool extended_precision = false;
};

struct ArithmeticWitness {
  int r = 0;
  std::int64_t c = 0;
  std::int64_t k = 0;
  bool c_in_family = false;          // c in C'_r
  std::optional<std::int64_t> k_threshold;
};

struct ExceptionalVerdict {
  std::uint64_t p = 0;
  std::int64_t l0 = 0;
  Route route = Route::kSpectral;
  VerdictStatus status = VerdictStatus::kOutOfScope;
  std::optional<SpectralWitness> spectral;
  std::optional<ArithmeticWitness> arithmetic;

  bool exceptional() const { return status == VerdictStatus::kExceptional; }
};

std::string to_string(VerdictStatus status);
std::string to_string(Route route);

// p must be an odd prime; p < 67 yields kOutOfScope.
ExceptionalVerdict is_exceptional_spectral(std::uint64_t p);

// Which parity enters F_r. kConsistent takes delta = (l0 + 1) mod 2, the
// parity of the covalency being tested, which is what the subset S^(l1,l2)
// realizes. kPublished takes delta = l0 mod 2; it is the reading under which
// the published threshold column is reproduced.
enum class DeltaConvention { kConsistent, kPublished };

std::string to_string(DeltaConvention convention);
DeltaConvention parse_delta_convention(const std::string& text);

// F_r(t) at t = f_{r,c}(k) = 36k^2 + 3(r+3)k + c, with l0 = 24k + r.
double interpolation_F(int r, std::int64_t c, std::int64_t k,
                       DeltaConvention convention = DeltaConvention::kConsistent);
long double interpolation_F_extended(int r, std::int64_t c, std::int64_t k,
                                     DeltaConvention convention = DeltaConvention::kConsistent);

// Limit of k * F_r(f_{r,c}(k)): (27(r+3)^2 - 432c - 256 pi^2) / 1296.
double asymptotic_coefficient(int r, std::int64_t c);

// ceil((27(r+3)^2 - 256 pi^2) / 432), the smallest c with a negative
// asymptotic coefficient.
std::int64_t smallest_negative_c(int r);

}  // namespace rq
