#pragma once

#include <cstddef>
#include <functional>

#include "ggentropy/sample.hpp"

namespace ggentropy {

struct EntropyEstimate {
  double value = 0.0;  // nats
  std::size_t n = 0;
  int k = 0;
  std::size_t dim = 0;
};

// k-th nearest-neighbour estimate of the Shannon entropy,
//   (1/N) sum_i log[ rho_k^m(X_i) * V_m * (N-1) * exp(-psi(k)) ].
// Log terms are accumulated with compensated summation. No points are
// dropped and no boundary correction is applied.
EntropyEstimate knn_entropy(const Sample& sample, int k, int threads = 0);

// The k = 1 special form,
//   (m/N) sum_i log rho_1(X_i) + log V_m + gamma + log(N-1),
// which agrees with knn_entropy(sample, 1) to within accumulated rounding.
EntropyEstimate knn_entropy_k1(const Sample& sample, int threads = 0);

// An isotropic density on R^m given by its log radial profile:
// f(x) = exp(log_density(||x||)).
struct RadialDensity {
  std::size_t dim = 0;
  std::function<double(double)> log_density;
};

// -integral f log f over the centered ball of the given radius, reduced
// to a one-dimensional radial integral. The radius should be chosen so
// the truncated tail mass is negligible (< 1e-10 for the families used
// here); the density must integrate to 1 +- 1e-6 over the ball, which is
// checked before the entropy integral runs.
double entropy_quadrature(const RadialDensity& density, double radius);

}  // namespace ggentropy
