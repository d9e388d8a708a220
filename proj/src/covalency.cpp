#include "rq/covalency.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rq/arith.hpp"
#include "rq/kernels.hpp"
#include "rq/spectrum.hpp"

namespace rq {

namespace {

template <typename Real>
Real mu2_closed_form(Real m, std::int64_t l1, std::int64_t l2, int delta) {
  const Real pi = std::numbers::pi_v<Real>;
  const Real denom = std::sin(pi / m);
  return std::sin(pi * static_cast<Real>(l1 - 1 + delta) / m) / denom + static_cast<Real>(1 - delta) +
         2 * std::sin(pi * static_cast<Real>(l2) / (2 * m)) / denom;
}

void check_extremal_split(std::int64_t m, std::int64_t l1, std::int64_t l2) {
  if (m < 2) throw std::invalid_argument("extremal |mu_2| needs m >= 2");
  const int delta = static_cast<int>((l1 + l2) & 1);
  const bool ok = l1 > 0 && l1 <= 2 * m && l2 > 0 && l2 < 2 * m && l2 % 2 == 0 &&
                  (l1 - 2 + delta) / 2 <= m - 1 && l2 / 2 <= m;
  if (!ok) {
    throw std::invalid_argument("(" + std::to_string(l1) + ", " + std::to_string(l2) +
                                ") is not an admissible S' split for m = " + std::to_string(m));
  }
}

void check_odd_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

template <typename Real>
Real interpolation_F_impl(int r, std::int64_t c, std::int64_t k, DeltaConvention convention) {
  if (r < 0 || r > 23) throw std::invalid_argument("residue r must lie in [0, 23]");
  if (k < 1) throw std::invalid_argument("interpolation_F needs k >= 1");
  const std::int64_t l0 = 24 * k + r;
  const std::int64_t l = l0 + 1;
  const ArgmaxProfile prof = argmax_profile(l);
  const int delta = static_cast<int>(convention == DeltaConvention::kConsistent ? (l & 1) : (l0 & 1));
  const Real t = static_cast<Real>(36 * k * k + 3 * (r + 3) * k + c);
  const Real radicand = 4 * t - static_cast<Real>(l) - 1;
  if (t <= 1 || radicand <= 0) {
    throw std::domain_error("f_{r,c}(k) too small for the interpolation function");
  }
  return mu2_closed_form<Real>(t, prof.l1, prof.l2, delta) - 2 * std::sqrt(radicand);
}

}  // namespace

std::int64_t trivial_bound(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("trivial_bound needs m >= 1");
  return static_cast<std::int64_t>(isqrt(16 * static_cast<std::uint64_t>(m))) - 2;
}

int exact_ltilde(OrderParam m, Family family) {
  if (m.value() > kMaxExactOrderParam) {
    throw std::invalid_argument("exact_ltilde enumerates exhaustively and is capped at m <= 12");
  }
  int best = 0;
  for (int l = 1; l < m.group_order(); ++l) {
    const CovalencyScan scan = kernels::omp::scan_covalency(m, l, family);
    if (scan.non_ramanujan > 0) break;
    if (scan.subsets > 0) best = l;
  }
  return best;
}

int argmax_offset(std::int64_t residue) {
  static constexpr int kOffsets[6] = {0, 2, 4, 0, 2, -2};
  const auto r = ((residue % 6) + 6) % 6;
  return kOffsets[r];
}

ArgmaxProfile argmax_profile(std::int64_t l) {
  if (l < 1) throw std::invalid_argument("argmax_profile needs l >= 1");
  ArgmaxProfile p;
  p.r6 = static_cast<int>(l % 6);
  p.a = argmax_offset(l);
  p.l1 = (l + p.a) / 3;
  p.l2 = (2 * l - p.a) / 3;
  return p;
}

double mu2_extremal(std::int64_t m, std::int64_t l1, std::int64_t l2) {
  check_extremal_split(m, l1, l2);
  return mu2_closed_form<double>(static_cast<double>(m), l1, l2, static_cast<int>((l1 + l2) & 1));
}

long double mu2_extremal_extended(std::int64_t m, std::int64_t l1, std::int64_t l2) {
  check_extremal_split(m, l1, l2);
  return mu2_closed_form<long double>(static_cast<long double>(m), l1, l2,
                                      static_cast<int>((l1 + l2) & 1));
}

double ramanujan_bound_at(std::int64_t m, std::int64_t l) {
  const std::int64_t degree = 4 * m - l;
  if (degree < 1) throw std::invalid_argument("covalency exceeds the group order");
  return 2.0 * std::sqrt(static_cast<double>(degree - 1));
}

ExtremalGap extremal_gap(std::int64_t m, std::int64_t l) {
  ExtremalGap g;
  g.l = l;
  g.profile = argmax_profile(l);
  g.mu2 = mu2_extremal(m, g.profile.l1, g.profile.l2);
  g.bound = ramanujan_bound_at(m, l);
  g.gap = g.mu2 - g.bound;
  if (std::fabs(g.gap) < kNearTieBand) {
    const long double mu = mu2_extremal_extended(m, g.profile.l1, g.profile.l2);
    const long double rb = 2.0L * std::sqrt(static_cast<long double>(4 * m - l - 1));
    g.gap = static_cast<double>(mu - rb);
    g.extended_precision = true;
  }
  return g;
}

double lambda_at_l0_plus_1(std::uint64_t p) {
  check_odd_prime(p);
  if (p < kMinClassifiedPrime) {
    throw std::domain_error("lambda(l0 + 1) = |mu_2| is only established for p >= 67");
  }
  const auto l = trivial_bound(static_cast<std::int64_t>(p)) + 1;
  const auto prof = argmax_profile(l);
  return mu2_extremal(static_cast<std::int64_t>(p), prof.l1, prof.l2);
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kExceptional: return "exceptional";
    case VerdictStatus::kOrdinary: return "ordinary";
    case VerdictStatus::kOutOfScope: return "out of theorem scope";
  }
  return "unknown";
}

std::string to_string(Route route) {
  return route == Route::kSpectral ? "spectral" : "arithmetic";
}

ExceptionalVerdict is_exceptional_spectral(std::uint64_t p) {
  check_odd_prime(p);
  ExceptionalVerdict v;
  v.p = p;
  v.route = Route::kSpectral;
  v.l0 = trivial_bound(static_cast<std::int64_t>(p));
  if (p < kMinClassifiedPrime) return v;
  const ExtremalGap g = extremal_gap(static_cast<std::int64_t>(p), v.l0 + 1);
  v.spectral = SpectralWitness{g.profile.l1, g.profile.l2, g.mu2, g.bound, g.extended_precision};
  v.status = g.gap <= 0.0 ? VerdictStatus::kExceptional : VerdictStatus::kOrdinary;
  return v;
}

std::string to_string(DeltaConvention convention) {
  return convention == DeltaConvention::kConsistent ? "consistent" : "published";
}

DeltaConvention parse_delta_convention(const std::string& text) {
  if (text == "consistent") return DeltaConvention::kConsistent;
  if (text == "published") return DeltaConvention::kPublished;
  throw std::invalid_argument("delta convention must be 'consistent' or 'published'");
}

double interpolation_F(int r, std::int64_t c, std::int64_t k, DeltaConvention convention) {
  return static_cast<double>(interpolation_F_impl<long double>(r, c, k, convention));
}

long double interpolation_F_extended(int r, std::int64_t c, std::int64_t k,
                                     DeltaConvention convention) {
  return interpolation_F_impl<long double>(r, c, k, convention);
}

double asymptotic_coefficient(int r, std::int64_t c) {
  const double s = r + 3;
  return (27.0 * s * s - 432.0 * static_cast<double>(c) - 256.0 * std::numbers::pi * std::numbers::pi) /
         1296.0;
}

std::int64_t smallest_negative_c(int r) {
  const double s = r + 3;
  return static_cast<std::int64_t>(
      std::ceil((27.0 * s * s - 256.0 * std::numbers::pi * std::numbers::pi) / 432.0));
}

}  // namespace rq
