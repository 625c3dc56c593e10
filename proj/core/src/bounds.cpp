#include "ggentropy/bounds.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "ggentropy/errors.hpp"
#include "ggentropy/quadrature.hpp"
#include "ggentropy/specfun.hpp"

namespace ggentropy {

namespace {

void require_sup_density(const DensitySummary& summary) {
  if (!(summary.sup_density > 0.0)) {
    throw DomainError("density summary must provide ||f||_inf > 0");
  }
}

double pathological_density(double x) {
  const double log_term = 1.0 - std::log(x);  // log(e/x)
  return 1.0 / (x * log_term * log_term);
}

}  // namespace

double lower_bound_bounded(const DensitySummary& summary) {
  require_sup_density(summary);
  return -std::log(summary.sup_density);
}

std::pair<double, double> bounds_log_concave(const DensitySummary& summary) {
  require_sup_density(summary);
  if (!summary.log_concave) {
    throw DomainError("bounds_log_concave requires the log-concave flag");
  }
  const double lower = -std::log(summary.sup_density);
  return {lower, static_cast<double>(summary.dim) + lower};
}

double lower_bound_moment(const DensitySummary& summary, double p) {
  if (!summary.log_concave) {
    throw DomainError("lower_bound_moment requires the log-concave flag");
  }
  if (!(p >= 1.0)) {
    throw DomainError("lower_bound_moment requires p >= 1");
  }
  if (!summary.central_moment_norm || !summary.moment_order ||
      std::abs(*summary.moment_order - p) > 1e-12) {
    throw DomainError("summary does not carry the p-th central moment norm");
  }
  return std::log(2.0 * *summary.central_moment_norm) -
         log_gamma(1.0 + p) / p;
}

double lower_bound_symmetric_1d(const DensitySummary& summary, double p) {
  if (summary.dim != 1) {
    throw DomainError("lower_bound_symmetric_1d is only defined for m = 1");
  }
  if (!summary.log_concave || !summary.symmetric) {
    throw DomainError(
        "lower_bound_symmetric_1d requires log-concave and symmetric flags");
  }
  if (!(p > -1.0) || p == 0.0) {
    throw DomainError("lower_bound_symmetric_1d requires p > -1, p != 0");
  }
  if (!summary.central_moment_norm || !summary.moment_order ||
      std::abs(*summary.moment_order - p) > 1e-12) {
    throw DomainError("summary does not carry the p-th moment norm");
  }
  return std::log(2.0 * *summary.central_moment_norm) -
         log_gamma(p + 1.0) / p;
}

double covariance_bound_constant(int dim) {
  if (dim < 1) throw DomainError("covariance_bound_constant requires m >= 1");
  const double m = dim;
  const double e2 = std::numbers::e * std::numbers::e;
  return e2 * m * m / (4.0 * std::numbers::sqrt2 * (m + 2.0));
}

double lower_bound_covariance(const DensitySummary& summary) {
  if (!summary.log_concave || !summary.symmetric) {
    throw DomainError(
        "lower_bound_covariance requires log-concave and symmetric flags");
  }
  if (!summary.covariance) {
    throw DomainError("summary does not carry a covariance matrix");
  }
  const double m = summary.dim;
  double c3 = covariance_bound_constant(summary.dim);
  if (summary.unconditional) {
    c3 = std::min(c3, covariance_bound_constant_unconditional);
  }
  const double log_det = cholesky_log_det(cholesky_factor(*summary.covariance));
  return 0.5 * m * (log_det / m - std::log(c3));
}

DensitySummary gg_density_summary(const GGParams& params) {
  DensitySummary summary;
  summary.dim = params.dim;
  summary.sup_density = std::exp(gg_log_normalizer(params));
  // Var of each coordinate: beta(m, s) after the (2 tau)^{-1/s} rescale
  // from the isotropic exponential-power member.
  const double coord_var =
      std::pow(2.0 * params.rate, -2.0 / params.shape) *
      gg_variance_scale(params.dim, params.shape);
  SquareMatrix cov(static_cast<std::size_t>(params.dim));
  for (int i = 0; i < params.dim; ++i) {
    cov.at(i, i) = coord_var;
  }
  summary.covariance = std::move(cov);
  summary.log_concave = params.shape >= 1.0;
  summary.symmetric = true;
  summary.unconditional = true;  // isotropic densities are unconditional
  return summary;
}

double gg_absolute_moment(const GGParams& params, double p) {
  if (!(p > 0.0)) throw DomainError("gg_absolute_moment requires p > 0");
  const double m = params.dim;
  const double s = params.shape;
  return std::exp(log_gamma((m + p) / s) - log_gamma(m / s) -
                  (p / s) * std::log(params.rate));
}

double pathological_mean() {
  // integral_0^1 [log^2(e/x)]^{-1} dx; bounded integrand, slow variation
  // toward 0, so geometric panels suffice.
  const auto integrand = [](double x) {
    const double log_term = 1.0 - std::log(x);
    return 1.0 / (log_term * log_term);
  };
  return integrate(integrand, geometric_breakpoints(1e-280, 1.0, 10.0), 1e-10,
                   20000)
      .value;
}

double pathological_truncated_entropy(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("pathological_truncated_entropy requires eps in (0, 1)");
  }
  const auto integrand = [](double x) {
    const double f = pathological_density(x);
    return -f * std::log(f);
  };
  std::vector<double> breaks = epsilon < 0.099
                                   ? geometric_breakpoints(epsilon, 0.1, 10.0)
                                   : std::vector<double>{epsilon};
  breaks.push_back(1.0);
  return integrate(integrand, breaks, 1e-10, 20000).value;
}

double pathological_ball_mass(int dim) {
  if (dim < 2) throw DomainError("pathological_ball_mass requires m >= 2");
  const double m = dim;
  const double c2 = std::exp(log_gamma(0.5 * m) -
                             std::log(2.0) - 0.5 * m * std::log(std::numbers::pi));
  const double surface =
      std::exp(std::log(2.0) + 0.5 * m * std::log(std::numbers::pi) -
               log_gamma(0.5 * m));
  // Radial mass integral in t = log(e/r). In r the tail toward zero
  // carries mass 1/log(e/r) and no double-precision cutoff reaches 1e-6;
  // the substitution makes the integrand t^{-2} and the quadrature exact.
  // Assembled in log space: r^m underflows for t beyond ~355/m.
  const double log_c2 = std::log(c2);
  const double log_surface = std::log(surface);
  const auto integrand = [&](double t) {
    const double log_r = 1.0 - t;
    const double log_term = 1.0 - log_r;  // log(e/r) = t
    const double log_density = log_c2 - m * log_r - 2.0 * std::log(log_term);
    // surface * r^(m-1) * f(r) * |dr/dt|, with |dr/dt| = r.
    return std::exp(log_surface + (m - 1.0) * log_r + log_density + log_r);
  };
  return integrate_semi_infinite(integrand, 1.0, 1e-10, 20000).value;
}

}  // namespace ggentropy
