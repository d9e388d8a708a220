#include "rq/dense_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rq/spectrum.hpp"

namespace rq {

bool SymmetricMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

double SymmetricMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (double v : data_) acc += v * v;
  return std::sqrt(acc);
}

double SymmetricMatrix::off_diagonal_norm() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j) acc += (*this)(i, j) * (*this)(i, j);
  return std::sqrt(acc);
}

SymmetricMatrix adjacency_matrix(const CayleySubset& s) {
  const OrderParam m = s.order_param();
  if (m.group_order() > kMaxOracleVertices) {
    throw std::invalid_argument("dense oracle is capped at 4096 vertices");
  }
  SymmetricMatrix a(static_cast<std::size_t>(m.group_order()));
  const auto gens = s.elements();
  for (const Element& g : all_elements(m)) {
    for (const Element& t : gens) a(index_of(g, m), index_of(multiply(g, t, m), m)) = 1.0;
  }
  return a;
}

std::vector<double> symmetric_eigenvalues(SymmetricMatrix a) {
  if (!a.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
  const std::size_t n = a.size();
  const double threshold = 1e-12 * std::max(a.frobenius_norm(), 1e-300);
  bool converged = n <= 1 || a.off_diagonal_norm() < threshold;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
    converged = a.off_diagonal_norm() < threshold;
  }
  if (!converged) throw std::runtime_error("Jacobi iteration did not converge in 100 sweeps");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double spectra_max_deviation(const CayleySubset& s) {
  const auto dense = symmetric_eigenvalues(adjacency_matrix(s));
  const auto formula = full_spectrum(s).sorted_values();
  if (dense.size() != formula.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < dense.size(); ++i) worst = std::max(worst, std::fabs(dense[i] - formula[i]));
  return worst;
}

bool spectra_match(const CayleySubset& s, double tol) { return spectra_max_deviation(s) <= tol; }

}  // namespace rq
