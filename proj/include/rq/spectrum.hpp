#pragma once

// Spectrum of the Cayley graph X(S) of Q_4m from its character table.
//
// The four degree-one characters contribute lambda_1..lambda_4 (each once);
// the m-1 degree-two representations phi_j contribute the eigenvalues
// mu_j^+- = z_j +- |w_j| of [[z_j, w_j], [conj(w_j), z_j]], each twice.

#include <complex>
#include <vector>

#include "rq/subset.hpp"

namespace rq {

inline constexpr double kValueMergeTolerance = 1e-9;
inline constexpr double kRamanujanTolerance = 1e-9;
inline constexpr double kNearTieBand = 1e-6;
// Exact ties (lambda = RB as real numbers) still carry ~1e-17 rounding in long double.
inline constexpr long double kExtendedRamanujanTolerance = 1e-12L;

struct OneDimEigenvalues {
  long long lambda1 = 0;
  long long lambda2 = 0;
  long long lambda3 = 0;
  long long lambda4 = 0;
};

struct TwoDimEigenvalues {
  double z = 0.0;
  std::complex<double> w;
  double mu_plus = 0.0;
  double mu_minus = 0.0;
};

struct SpectrumEntry {
  double value = 0.0;
  int multiplicity = 0;
};

class Spectrum {
 public:
  // `values` holds every eigenvalue with repetition.
  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& sorted_values() const { return values_; }  // descending
  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  int total_multiplicity() const { return static_cast<int>(values_.size()); }
  double trace() const;
  double second_moment() const;

 private:
  std::vector<double> values_;
  std::vector<SpectrumEntry> entries_;
};

OneDimEigenvalues one_dim_eigenvalues(const CayleySubset& s);

// 1 <= j <= m-1.
TwoDimEigenvalues two_dim_eigenvalues(const CayleySubset& s, int j);

// Same quantities in long double with compensated summation; used when a
// Ramanujan verdict sits inside the near-tie band.
long double z_extended(const CayleySubset& s, int j);
long double w_abs_extended(const CayleySubset& s, int j);

Spectrum full_spectrum(const CayleySubset& s);

// max(|mu_j^+|, |mu_j^-|) = |z_j| + |w_j|.
double mu_abs(const CayleySubset& s, int j);

// Largest |eigenvalue| among those with |eigenvalue| != |S|.
double lambda_max_nontrivial(const CayleySubset& s);

double ramanujan_bound(const CayleySubset& s);

struct RamanujanVerdict {
  double lambda = 0.0;
  double bound = 0.0;
  bool ramanujan = false;
  bool extended_precision = false;  // verdict re-decided in long double
};

RamanujanVerdict ramanujan_verdict(const CayleySubset& s);
bool is_ramanujan(const CayleySubset& s);

}  // namespace rq
