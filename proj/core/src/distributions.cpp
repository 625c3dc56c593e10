#include "ggentropy/distributions.hpp"

#include <cmath>
#include <numbers>

#include "ggentropy/errors.hpp"
#include "ggentropy/specfun.hpp"

namespace ggentropy {

namespace {

constexpr double log_pi_v = 1.1447298858494001741;  // log(pi)

void check_gg(const GGParams& p) {
  if (p.dim < 1 || !(p.shape > 0.0) || !(p.rate > 0.0)) {
    throw DomainError("GGParams requires dim >= 1, shape > 0, rate > 0");
  }
}

double norm(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return std::sqrt(sum);
}

}  // namespace

double gg_log_normalizer(const GGParams& params) {
  check_gg(params);
  const double m = params.dim;
  const double s = params.shape;
  return log_gamma(0.5 * m + 1.0) + (m / s) * std::log(params.rate) -
         log_gamma(m / s + 1.0) - 0.5 * m * log_pi_v;
}

double gg_log_pdf_radius(const GGParams& params, double r) {
  return gg_log_normalizer(params) - params.rate * std::pow(r, params.shape);
}

double gg_log_pdf(const GGParams& params, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(params.dim)) {
    throw DomainError("gg_log_pdf: point dimension mismatch");
  }
  return gg_log_pdf_radius(params, norm(x));
}

double mep_log_pdf(const MEPParams& params, std::span<const double> x) {
  const double m = params.dim;
  const double s = params.shape;
  if (x.size() != static_cast<std::size_t>(params.dim)) {
    throw DomainError("mep_log_pdf: point dimension mismatch");
  }
  if (!(s > 0.0)) throw DomainError("mep_log_pdf requires shape > 0");
  const SquareMatrix lower = cholesky_factor(params.scatter);

  std::vector<double> centered(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    centered[i] = x[i] - params.location[i];
  }
  const std::vector<double> y = forward_solve(lower, centered);
  double quad_form = 0.0;
  for (double v : y) quad_form += v * v;

  const double log_norm = log_gamma(0.5 * m + 1.0) - 0.5 * m * log_pi_v -
                          log_gamma(m / s + 1.0) - (m / s) * std::log(2.0) -
                          0.5 * cholesky_log_det(lower);
  return log_norm - 0.5 * std::pow(quad_form, 0.5 * s);
}

double iep_log_pdf(int dim, double shape, std::span<const double> x) {
  // mu = 0, Sigma = I; same as GG with tau = 1/2.
  return gg_log_pdf(GGParams{dim, shape, 0.5}, x);
}

double gg_moment(const GGParams& params) {
  check_gg(params);
  return params.dim / (params.shape * params.rate);
}

double gg_variance_scale(int dim, double shape) {
  if (dim < 1 || !(shape > 0.0)) {
    throw DomainError("gg_variance_scale requires dim >= 1, shape > 0");
  }
  const double m = dim;
  const double s = shape;
  return std::exp((2.0 / s) * std::log(2.0) + log_gamma((m + 2.0) / s) -
                  std::log(m) - log_gamma(m / s));
}

double gg_entropy(const GGParams& params) {
  return params.dim / params.shape - gg_log_normalizer(params);
}

double max_entropy_constant(int dim, double shape) {
  if (dim < 1 || !(shape > 0.0)) {
    throw DomainError("max_entropy_constant requires dim >= 1, shape > 0");
  }
  const double m = dim;
  const double s = shape;
  const double log_c1 =
      (s / m) * (0.5 * m * log_pi_v + log_gamma(m / s + 1.0) -
                 log_gamma(0.5 * m + 1.0)) +
      std::log(s) + 1.0 - std::log(m);
  return std::exp(log_c1);
}

double max_entropy_bound(int dim, double shape, double moment) {
  if (!(moment > 0.0)) throw DomainError("max_entropy_bound requires moment > 0");
  const double m = dim;
  const double s = shape;
  // Expanded in log space; algebraically m/s - log c(m,s) at the matched
  // rate tau = m / (s moment).
  const double log_c1 = (s / m) * (0.5 * m * log_pi_v + log_gamma(m / s + 1.0) -
                                   log_gamma(0.5 * m + 1.0)) +
                        std::log(s) + 1.0 - std::log(m);
  return (m / s) * (log_c1 + std::log(moment));
}

double gaussian_max_entropy(int dim, const SquareMatrix& scatter) {
  if (dim < 1 || scatter.dim != static_cast<std::size_t>(dim)) {
    throw DomainError("gaussian_max_entropy: dimension mismatch");
  }
  const SquareMatrix lower = cholesky_factor(scatter);
  const double m = dim;
  return 0.5 * m * std::log(2.0 * std::numbers::pi * std::numbers::e) +
         0.5 * cholesky_log_det(lower);
}

double st_log_pdf_radius(const STParams& params, double r) {
  const double m = params.dim;
  const double nu = params.dof;
  if (!(nu > 0.0) || params.dim < 1) {
    throw DomainError("STParams requires dim >= 1 and dof > 0");
  }
  return log_gamma(0.5 * (nu + m)) - log_gamma(0.5 * nu) -
         0.5 * m * std::log(nu * std::numbers::pi) -
         0.5 * (nu + m) * std::log1p(r * r / nu);
}

double st_log_pdf(const STParams& params, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(params.dim)) {
    throw DomainError("st_log_pdf: point dimension mismatch");
  }
  return st_log_pdf_radius(params, norm(x));
}

RadialDensity gg_radial_density(const GGParams& params) {
  check_gg(params);
  GGParams copy = params;
  return RadialDensity{static_cast<std::size_t>(params.dim),
                       [copy](double r) { return gg_log_pdf_radius(copy, r); }};
}

RadialDensity st_radial_density(const STParams& params) {
  STParams copy = params;
  return RadialDensity{static_cast<std::size_t>(params.dim),
                       [copy](double r) { return st_log_pdf_radius(copy, r); }};
}

Sample sample_gg(const GGParams& params, std::size_t n,
                 const RandomStream& stream) {
  check_gg(params);
  if (n == 0) throw DomainError("sample_gg requires n >= 1");
  const std::size_t m = static_cast<std::size_t>(params.dim);
  const double s = params.shape;
  // Direction times radius gives tau = 1/2; one deterministic rescale
  // reaches the requested rate.
  const double rescale = std::pow(2.0 * params.rate, -1.0 / s);

  Sample sample(n, m);
  Rng rng(stream);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = sample.row(i);
    rng.unit_sphere(row);
    const double v = rng.gamma(static_cast<double>(m) / s, 2.0);
    const double radius = std::pow(v, 1.0 / s) * rescale;
    for (double& c : row) c *= radius;
  }
  return sample;
}

Sample sample_st(const STParams& params, std::size_t n,
                 const RandomStream& stream) {
  if (!(params.dof > 0.0) || params.dim < 1) {
    throw DomainError("STParams requires dim >= 1 and dof > 0");
  }
  if (n == 0) throw DomainError("sample_st requires n >= 1");
  const std::size_t m = static_cast<std::size_t>(params.dim);
  const double nu = params.dof;

  Sample sample(n, m);
  Rng rng(stream);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = sample.row(i);
    rng.normal_vector(row);
    // nu G ~ chi-squared(nu)  <=>  G ~ Gamma(nu/2, scale 2/nu).
    const double g = rng.gamma(0.5 * nu, 2.0 / nu);
    const double factor = 1.0 / std::sqrt(g);
    for (double& c : row) c *= factor;
  }
  return sample;
}

}  // namespace ggentropy
