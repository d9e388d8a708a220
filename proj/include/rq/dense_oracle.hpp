#pragma once

// Brute-force spectrum: explicit adjacency matrix plus cyclic Jacobi
// rotations. Shares nothing with the character-table path except the group
// multiplication, so it serves as an independent check of it.

#include <cstddef>
#include <vector>

#include "rq/subset.hpp"

namespace rq {

inline constexpr int kMaxOracleVertices = 4096;
inline constexpr double kOracleTolerance = 1e-8;

class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;
  double frobenius_norm() const;
  double off_diagonal_norm() const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

// A[g][h] = 1 iff g^-1 h is in S, vertices ordered by index_of().
SymmetricMatrix adjacency_matrix(const CayleySubset& s);

// All eigenvalues, sorted descending. Throws std::runtime_error if 100
// sweeps do not bring the off-diagonal norm under 1e-12 * ||A||_F.
std::vector<double> symmetric_eigenvalues(SymmetricMatrix a);

bool spectra_match(const CayleySubset& s, double tol = kOracleTolerance);

// Largest elementwise gap between the character-table spectrum and the
// dense one.
double spectra_max_deviation(const CayleySubset& s);

}  // namespace rq
