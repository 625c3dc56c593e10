#pragma once

#include <optional>
#include <utility>

#include "ggentropy/distributions.hpp"
#include "ggentropy/linalg.hpp"

namespace ggentropy {

// Scalar functionals of a density, enough to evaluate the entropy
// lower bounds. The inequalities consume only these summaries, never the
// density itself.
struct DensitySummary {
  int dim = 1;
  double sup_density = 0.0;                  // ||f||_inf
  std::optional<SquareMatrix> covariance;    // Sigma_x
  std::optional<double> moment_order;        // p of the stored moment
  std::optional<double> central_moment_norm; // ||X - EX||_p
  bool log_concave = false;
  bool symmetric = false;
  bool unconditional = false;
};

// H(f) >= -log ||f||_inf for any bounded density.
double lower_bound_bounded(const DensitySummary& summary);

// For log-concave f: -log||f||_inf <= H(f) <= m - log||f||_inf.
std::pair<double, double> bounds_log_concave(const DensitySummary& summary);

// Log-concave moment bound H >= log( 2 ||X - EX||_p / Gamma(1+p)^{1/p} ),
// p >= 1.
double lower_bound_moment(const DensitySummary& summary, double p);

// One-dimensional symmetric log-concave variant, valid for p > -1.
double lower_bound_symmetric_1d(const DensitySummary& summary, double p);

// Covariance bound H >= (m/2) log[ (det Sigma_x)^{1/m} / c3(m) ] for
// symmetric log-concave vectors. The unconditional constant e^2/2 is used
// when the summary is flagged unconditional and it improves (is smaller
// than) the general constant e^2 m^2 / (4 sqrt(2) (m+2)).
double lower_bound_covariance(const DensitySummary& summary);

double covariance_bound_constant(int dim);  // general c3(m)
inline constexpr double covariance_bound_constant_unconditional =
    3.6945280494653251136;  // e^2 / 2

// Summary of GG_tau(m, s) from closed forms (sup density, covariance,
// moments; log-concave iff s >= 1; isotropic, hence symmetric and
// unconditional).
DensitySummary gg_density_summary(const GGParams& params);

// E ||X||^p for GG_tau(m, s): Gamma((m+p)/s) / Gamma(m/s) * tau^{-p/s}.
double gg_absolute_moment(const GGParams& params, double p);

// The bounded-support density f(x) = [x log^2(e/x)]^{-1} on [0, 1]:
// finite mean but H(f) = -infinity.
double pathological_mean();

// -integral_eps^1 f log f, strictly decreasing to -infinity as eps -> 0.
double pathological_truncated_entropy(double epsilon);

// Its m >= 2 analogue c2(m) [||x||^m log^2(e/||x||)]^{-1} on the unit
// ball: total mass over the ball, integrated in the substituted variable
// t = log(e/r) because the radial tail toward r = 0 decays only like
// 1/log(e/r).
double pathological_ball_mass(int dim);

}  // namespace ggentropy
