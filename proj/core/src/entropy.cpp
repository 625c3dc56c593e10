#include "ggentropy/entropy.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ggentropy/errors.hpp"
#include "ggentropy/neighbors.hpp"
#include "ggentropy/quadrature.hpp"
#include "ggentropy/specfun.hpp"
#include "ggentropy/summation.hpp"

namespace ggentropy {

EntropyEstimate knn_entropy(const Sample& sample, int k, int threads) {
  const NeighborDistances nn = knn_distances_indexed(sample, k, threads);
  const std::size_t n = sample.n();
  const double m = static_cast<double>(sample.dim());

  std::vector<double> log_terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    log_terms[i] = m * std::log(nn.distances[i]);
  }
  const double mean_log = compensated_sum(log_terms) / static_cast<double>(n);
  const double value = mean_log + std::log(unit_ball_volume(sample.dim())) +
                       std::log(static_cast<double>(n - 1)) -
                       digamma(static_cast<double>(k));
  return EntropyEstimate{value, n, k, sample.dim()};
}

EntropyEstimate knn_entropy_k1(const Sample& sample, int threads) {
  const NeighborDistances nn = knn_distances_indexed(sample, 1, threads);
  const std::size_t n = sample.n();
  const double m = static_cast<double>(sample.dim());

  std::vector<double> log_terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    log_terms[i] = std::log(nn.distances[i]);
  }
  const double value =
      m * compensated_sum(log_terms) / static_cast<double>(n) +
      std::log(unit_ball_volume(sample.dim())) + euler_gamma +
      std::log(static_cast<double>(n - 1));
  return EntropyEstimate{value, n, 1, sample.dim()};
}

double entropy_quadrature(const RadialDensity& density, double radius) {
  if (density.dim < 1 || !density.log_density) {
    throw DomainError("entropy_quadrature requires dim >= 1 and a density");
  }
  if (!(radius > 0.0)) {
    throw DomainError("entropy_quadrature requires a positive radius");
  }
  const double m = static_cast<double>(density.dim);
  // Surface factor 2 pi^{m/2} / Gamma(m/2) of the radial reduction.
  const double surface =
      std::exp(std::log(2.0) + 0.5 * m * std::log(std::numbers::pi) -
               log_gamma(0.5 * m));

  const auto mass_integrand = [&](double r) {
    const double log_f = density.log_density(r);
    const double f = std::exp(log_f);
    return f == 0.0 ? 0.0 : surface * std::pow(r, m - 1.0) * f;
  };
  const auto mass = integrate(mass_integrand, 0.0, radius, 1e-10, 20000);
  if (std::abs(mass.value - 1.0) > 1e-6) {
    throw InconsistentDensityError(
        "density integrates to " + std::to_string(mass.value) +
        " over the truncated support (must be 1 +- 1e-6)");
  }

  const auto entropy_integrand = [&](double r) {
    const double log_f = density.log_density(r);
    const double f = std::exp(log_f);
    return f == 0.0 ? 0.0 : -surface * std::pow(r, m - 1.0) * f * log_f;
  };
  return integrate(entropy_integrand, 0.0, radius, 1e-10, 20000).value;
}

}  // namespace ggentropy
