#include "ggentropy/linalg.hpp"

#include <cmath>

#include "ggentropy/errors.hpp"

namespace ggentropy {

SquareMatrix cholesky_factor(const SquareMatrix& a) {
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a.at(i, j) != a.at(j, i)) {
        throw DecompositionError("matrix is not symmetric");
      }
    }
  }
  SquareMatrix lower(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = a.at(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= lower.at(i, k) * lower.at(j, k);
      if (i == j) {
        if (!(sum > 0.0)) {
          throw DecompositionError("matrix is not positive definite");
        }
        lower.at(i, i) = std::sqrt(sum);
      } else {
        lower.at(i, j) = sum / lower.at(j, j);
      }
    }
  }
  return lower;
}

double cholesky_log_det(const SquareMatrix& lower) {
  double log_det = 0.0;
  for (std::size_t i = 0; i < lower.dim; ++i) {
    log_det += 2.0 * std::log(lower.at(i, i));
  }
  return log_det;
}

std::vector<double> forward_solve(const SquareMatrix& lower,
                                  std::span<const double> b) {
  const std::size_t n = lower.dim;
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = b[i];
    for (std::size_t k = 0; k < i; ++k) sum -= lower.at(i, k) * y[k];
    y[i] = sum / lower.at(i, i);
  }
  return y;
}

}  // namespace ggentropy
