#include "rq/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rq {

namespace {

double pairwise_sum(const double* first, std::size_t n) {
  if (n <= 8) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += first[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(first, half) + pairwise_sum(first + half, n - half);
}

double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

// Kahan-Babuska (Neumaier) accumulator.
struct CompensatedSum {
  long double sum = 0.0L;
  long double carry = 0.0L;

  void add(long double x) {
    long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) carry += (sum - t) + x;
    else carry += (x - t) + sum;
    sum = t;
  }
  long double value() const { return sum + carry; }
};

// pi * (j*k mod 2m) / m, reduced exactly before the floating-point step.
template <typename Real>
Real phase(int j, int k, int m) {
  const long long n = 2LL * m;
  const long long r = (static_cast<long long>(j) * k) % n;
  return std::numbers::pi_v<Real> * static_cast<Real>(r) / static_cast<Real>(m);
}

void check_index(const CayleySubset& s, int j) {
  if (j < 1 || j > s.m() - 1) {
    throw std::out_of_range("two-dimensional representation index j must lie in [1, m-1]");
  }
}

struct MuValues {
  std::vector<double> plus;
  std::vector<double> minus;
};

MuValues all_mu(const CayleySubset& s) {
  MuValues out;
  for (int j = 1; j < s.m(); ++j) {
    auto t = two_dim_eigenvalues(s, j);
    out.plus.push_back(t.mu_plus);
    out.minus.push_back(t.mu_minus);
  }
  return out;
}

}  // namespace

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
  for (double v : values_) {
    if (!entries_.empty() && std::fabs(entries_.back().value - v) <= kValueMergeTolerance) {
      ++entries_.back().multiplicity;
    } else {
      entries_.push_back(SpectrumEntry{v, 1});
    }
  }
}

double Spectrum::trace() const { return pairwise_sum(values_); }

double Spectrum::second_moment() const {
  std::vector<double> sq(values_.size());
  std::transform(values_.begin(), values_.end(), sq.begin(), [](double v) { return v * v; });
  return pairwise_sum(sq);
}

OneDimEigenvalues one_dim_eigenvalues(const CayleySubset& s) {
  const SigmaCounts sg = s.sigma_counts();
  const long long d = s.delta();
  const long long s1 = 2LL * (sg.even1 + sg.odd1) + d;
  const long long s2 = 2LL * (sg.even2 + sg.odd2);
  const long long diff1 = 2LL * (sg.even1 - sg.odd1);
  OneDimEigenvalues out;
  out.lambda1 = s1 + s2;
  out.lambda2 = s1 - s2;
  if (s.order_param().is_odd()) {
    // chi_3, chi_4 take the values +-i(-1)^k on <x>y; each inverse pair cancels.
    out.lambda3 = diff1 - d;
    out.lambda4 = diff1 - d;
  } else {
    const long long diff2 = 2LL * (sg.even2 - sg.odd2);
    out.lambda3 = diff1 + d + diff2;
    out.lambda4 = diff1 + d - diff2;
  }
  return out;
}

TwoDimEigenvalues two_dim_eigenvalues(const CayleySubset& s, int j) {
  check_index(s, j);
  const int m = s.m();
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(m));
  for (int k1 = 1; k1 < m; ++k1) {
    if (s.has_pair(k1)) terms.push_back(2.0 * std::cos(phase<double>(j, k1, m)));
  }
  if (s.delta() == 1) terms.push_back(j % 2 == 0 ? 1.0 : -1.0);

  TwoDimEigenvalues out;
  out.z = pairwise_sum(terms);
  if (j % 2 == 0) {
    std::vector<double> re, im;
    for (int k2 = 0; k2 < m; ++k2) {
      if (!s.has_ypair(k2)) continue;
      const double a = phase<double>(j, k2, m);
      re.push_back(std::cos(a));
      im.push_back(std::sin(a));
    }
    out.w = {2.0 * pairwise_sum(re), 2.0 * pairwise_sum(im)};
  }
  const double w_abs = std::abs(out.w);
  out.mu_plus = out.z + w_abs;
  out.mu_minus = out.z - w_abs;
  return out;
}

long double z_extended(const CayleySubset& s, int j) {
  check_index(s, j);
  CompensatedSum acc;
  for (int k1 = 1; k1 < s.m(); ++k1) {
    if (s.has_pair(k1)) acc.add(2.0L * std::cos(phase<long double>(j, k1, s.m())));
  }
  if (s.delta() == 1) acc.add(j % 2 == 0 ? 1.0L : -1.0L);
  return acc.value();
}

long double w_abs_extended(const CayleySubset& s, int j) {
  check_index(s, j);
  if (j % 2 != 0) return 0.0L;
  CompensatedSum re, im;
  for (int k2 = 0; k2 < s.m(); ++k2) {
    if (!s.has_ypair(k2)) continue;
    const long double a = phase<long double>(j, k2, s.m());
    re.add(std::cos(a));
    im.add(std::sin(a));
  }
  return 2.0L * std::hypot(re.value(), im.value());
}

Spectrum full_spectrum(const CayleySubset& s) {
  const auto one = one_dim_eigenvalues(s);
  std::vector<double> values{static_cast<double>(one.lambda1), static_cast<double>(one.lambda2),
                             static_cast<double>(one.lambda3), static_cast<double>(one.lambda4)};
  const auto mu = all_mu(s);
  for (std::size_t i = 0; i < mu.plus.size(); ++i) {
    values.insert(values.end(), 2, mu.plus[i]);
    values.insert(values.end(), 2, mu.minus[i]);
  }
  return Spectrum(std::move(values));
}

double mu_abs(const CayleySubset& s, int j) {
  auto t = two_dim_eigenvalues(s, j);
  return std::fabs(t.z) + std::abs(t.w);
}

double lambda_max_nontrivial(const CayleySubset& s) {
  const double degree = s.size();
  const auto one = one_dim_eigenvalues(s);
  std::vector<double> candidates{static_cast<double>(one.lambda2), static_cast<double>(one.lambda3),
                                 static_cast<double>(one.lambda4)};
  const auto mu = all_mu(s);
  candidates.insert(candidates.end(), mu.plus.begin(), mu.plus.end());
  candidates.insert(candidates.end(), mu.minus.begin(), mu.minus.end());
  bool found = false;
  double best = 0.0;
  for (double v : candidates) {
    const double a = std::fabs(v);
    if (std::fabs(a - degree) <= kValueMergeTolerance) continue;
    best = found ? std::max(best, a) : a;
    found = true;
  }
  if (!found) throw std::domain_error("every eigenvalue has absolute value |S|");
  return best;
}

double ramanujan_bound(const CayleySubset& s) {
  if (s.size() < 1) throw std::domain_error("Ramanujan bound needs a non-empty subset");
  return 2.0 * std::sqrt(static_cast<double>(s.size() - 1));
}

RamanujanVerdict ramanujan_verdict(const CayleySubset& s) {
  RamanujanVerdict v;
  v.lambda = lambda_max_nontrivial(s);
  v.bound = ramanujan_bound(s);
  v.ramanujan = v.lambda <= v.bound + kRamanujanTolerance;
  if (std::fabs(v.lambda - v.bound) < kNearTieBand) {
    const long double degree = s.size();
    const auto one = one_dim_eigenvalues(s);
    long double lam = 0.0L;
    auto consider = [&](long double x) {
      const long double a = std::fabs(x);
      if (std::fabs(a - degree) > 1e-12L) lam = std::max(lam, a);
    };
    consider(one.lambda2);
    consider(one.lambda3);
    consider(one.lambda4);
    for (int j = 1; j < s.m(); ++j) {
      const long double z = z_extended(s, j);
      const long double w = w_abs_extended(s, j);
      consider(z + w);
      consider(z - w);
    }
    const long double bound = 2.0L * std::sqrt(degree - 1.0L);
    v.extended_precision = true;
    v.ramanujan = lam <= bound + kExtendedRamanujanTolerance;
  }
  return v;
}

bool is_ramanujan(const CayleySubset& s) { return ramanujan_verdict(s).ramanujan; }

}  // namespace rq
