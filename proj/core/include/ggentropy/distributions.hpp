#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ggentropy/entropy.hpp"
#include "ggentropy/linalg.hpp"
#include "ggentropy/random.hpp"
#include "ggentropy/sample.hpp"

namespace ggentropy {

// Generalized Gaussian GG_tau(m, s): density c(m,s) exp(-tau ||x||^s) with
//   c(m,s) = Gamma(m/2+1) tau^{m/s} / (Gamma(m/s+1) pi^{m/2}).
// tau = 1/s is the canonical member; tau = 1/2 is the isotropic
// exponential-power special case.
struct GGParams {
  int dim = 1;
  double shape = 2.0;  // s
  double rate = 0.5;   // tau

  static GGParams canonical(int dim, double shape) {
    return GGParams{dim, shape, 1.0 / shape};
  }
};

// Multivariate exponential power MEP_m(s, mu, Sigma).
struct MEPParams {
  int dim = 1;
  double shape = 2.0;
  std::vector<double> location;  // mu, length dim
  SquareMatrix scatter;          // Sigma, dim x dim SPD

  MEPParams(int m, double s)
      : dim(m), shape(s), location(m, 0.0), scatter(SquareMatrix::identity(m)) {}
};

// Isotropic multivariate Student t ST(m, nu).
struct STParams {
  int dim = 1;
  double dof = 1.0;  // nu
};

double gg_log_pdf(const GGParams& params, std::span<const double> x);
double gg_log_pdf_radius(const GGParams& params, double r);

// log c(m, s) at the params' tau.
double gg_log_normalizer(const GGParams& params);

double mep_log_pdf(const MEPParams& params, std::span<const double> x);
double iep_log_pdf(int dim, double shape, std::span<const double> x);

// E ||X||^s = m / (s tau).
double gg_moment(const GGParams& params);

// beta(m, s) = 2^{2/s} Gamma[(m+2)/s] / (m Gamma(m/s)): the per-coordinate
// variance of the isotropic exponential-power distribution, and the
// sigma^2 used to standardize samples.
double gg_variance_scale(int dim, double shape);

// Closed-form entropy m/s - log c(m, s).
double gg_entropy(const GGParams& params);

// c1(m, s) = (pi^{m/2} Gamma(m/s+1) / Gamma(m/2+1))^{s/m} * (s e / m),
// evaluated in log space.
double max_entropy_constant(int dim, double shape);

// (m/s) log(c1(m,s) * moment): the entropy bound at a fixed E||X||^s.
// Equality holds exactly for GG with tau = m / (s * moment).
double max_entropy_bound(int dim, double shape, double moment);

// log[(2 pi e)^{m/2} sqrt(det Sigma)] via Cholesky log-determinant.
double gaussian_max_entropy(int dim, const SquareMatrix& scatter);

double st_log_pdf(const STParams& params, std::span<const double> x);
double st_log_pdf_radius(const STParams& params, double r);

// Radial profiles for the entropy/normalization quadrature oracle.
RadialDensity gg_radial_density(const GGParams& params);
RadialDensity st_radial_density(const STParams& params);

// Exact sampler: X = U R with U uniform on the sphere and R = V^{1/s},
// V ~ Gamma(m/s, scale 2); this realizes tau = 1/2 and is then rescaled
// by (2 tau)^{-1/s} to the requested rate.
Sample sample_gg(const GGParams& params, std::size_t n,
                 const RandomStream& stream);

// Exact sampler: X = Z / sqrt(G) with Z standard normal and
// nu G ~ chi-squared(nu), i.e. G ~ Gamma(nu/2, scale 2/nu).
Sample sample_st(const STParams& params, std::size_t n,
                 const RandomStream& stream);

}  // namespace ggentropy
