#pragma once

#include <functional>
#include <vector>

namespace ggentropy {

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod (G7, K15) on [a, b]: the interval with
// the largest error estimate is bisected until the summed estimate falls
// below abs_tol or the interval budget runs out.
IntegrationResult integrate(const std::function<double(double)>& f, double a,
                            double b, double abs_tol = 1e-10,
                            int max_intervals = 4000);

// Same, but seeded with explicit breakpoints. Useful when the integrand
// varies over decades (geometric panels toward a singularity).
IntegrationResult integrate(const std::function<double(double)>& f,
                            const std::vector<double>& breakpoints,
                            double abs_tol = 1e-10, int max_intervals = 4000);

// Integral over [a, infinity) via the rational substitution
// t = a + u/(1-u). The integrand must decay fast enough to be integrable.
IntegrationResult integrate_semi_infinite(const std::function<double(double)>& f,
                                          double a, double abs_tol = 1e-10,
                                          int max_intervals = 4000);

// Breakpoints b, b/ratio, b/ratio^2, ... down to a (a prepended), for
// integrands concentrated near zero.
std::vector<double> geometric_breakpoints(double a, double b,
                                          double ratio = 10.0);

}  // namespace ggentropy
