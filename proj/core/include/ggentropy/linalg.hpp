#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ggentropy {

// Dense square matrix, row-major. Dimensions here are tiny (the sample
// dimension m), so no external linear algebra is pulled in.
struct SquareMatrix {
  explicit SquareMatrix(std::size_t n) : dim(n), data(n * n, 0.0) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  double& at(std::size_t i, std::size_t j) { return data[i * dim + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * dim + j]; }

  std::size_t dim;
  std::vector<double> data;
};

// Lower-triangular Cholesky factor L with A = L L^T.
// Throws DecompositionError if A is not symmetric positive definite.
SquareMatrix cholesky_factor(const SquareMatrix& a);

// log det A from its Cholesky factor.
double cholesky_log_det(const SquareMatrix& lower);

// Solves L y = b by forward substitution (enough for the quadratic form
// (x-mu)^T A^{-1} (x-mu) = ||y||^2).
std::vector<double> forward_solve(const SquareMatrix& lower,
                                  std::span<const double> b);

}  // namespace ggentropy
