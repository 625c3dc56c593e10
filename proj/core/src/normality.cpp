#include "ggentropy/normality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ggentropy/distributions.hpp"
#include "ggentropy/errors.hpp"
#include "ggentropy/gof.hpp"
#include "ggentropy/parallel.hpp"

namespace ggentropy {

namespace {

double normal_upper_tail(double z) {
  return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

// Wichura's PPND16: inverse standard normal CDF, ~1e-16 accuracy.
double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("normal_quantile requires p in (0, 1)");
  }
  const double q = p - 0.5;
  double r;
  if (std::abs(q) <= 0.425) {
    r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
               1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
             1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
               5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
             4.2313330701600911252e1) * r + 1.0);
  }
  r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = (((((((7.74545014278341407640e-4 * r +
                   2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e0) *
                    r + 3.64784832476320460504e0) * r +
               5.76949722146069140550e0) * r + 4.63033784615654529590e0) * r +
             1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r +
                   5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) *
                    r + 6.89767334985100004550e-1) * r +
               1.67638483018380384940e0) * r + 2.05319162663775882187e0) * r +
             1.0);
  } else {
    r -= 5.0;
    value = (((((((2.01033439929228813265e-7 * r +
                   2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) *
                    r + 2.96560571828504891230e-1) * r +
               1.78482653991729133580e0) * r + 5.46378491116411436990e0) * r +
             6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r +
                   1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) *
                    r + 1.48753612908506148525e-2) * r +
               1.36929880922735805310e-1) * r + 5.99832206555887937690e-1) * r +
             1.0);
  }
  return q < 0.0 ? -value : value;
}

double polyval(std::span<const double> coeffs, double x) {
  // coeffs[0] is the constant term.
  double result = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) result = result * x + coeffs[i];
  return result;
}

}  // namespace

NormalityResult shapiro_wilk(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 3 || n > 5000) {
    throw ArityError("shapiro_wilk supports 3 <= n <= 5000 (n=" +
                     std::to_string(n) + ")");
  }
  std::vector<double> x(values.begin(), values.end());
  std::sort(x.begin(), x.end());
  if (x.front() == x.back()) {
    throw DegenerateSampleError("shapiro_wilk requires non-constant input");
  }

  // Expected normal order statistics (Blom scores) and their norm.
  std::vector<double> m(n);
  double m_norm2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = normal_quantile((static_cast<double>(i + 1) - 0.375) /
                           (static_cast<double>(n) + 0.25));
    m_norm2 += m[i] * m[i];
  }

  // Royston's polynomial-corrected weights for the two largest order
  // statistics; the remainder are rescaled Blom scores.
  std::vector<double> a(n);
  const double u = 1.0 / std::sqrt(static_cast<double>(n));
  static constexpr double c1[6] = {0.0,       0.221157,  -0.147981,
                                   -2.071190, 4.434685,  -2.706056};
  static constexpr double c2[6] = {0.0,       0.042981,  -0.293762,
                                   -1.752461, 5.682633,  -3.582633};
  const double rsqrt_m = 1.0 / std::sqrt(m_norm2);
  if (n == 3) {
    a[0] = -std::numbers::sqrt2 / 2.0;
    a[2] = -a[0];
    a[1] = 0.0;
  } else {
    const double an = polyval(c1, u) + m[n - 1] * rsqrt_m;
    double phi;
    if (n <= 5) {
      phi = (m_norm2 - 2.0 * m[n - 1] * m[n - 1]) / (1.0 - 2.0 * an * an);
      a[n - 1] = an;
      a[0] = -an;
      for (std::size_t i = 1; i + 1 < n; ++i) a[i] = m[i] / std::sqrt(phi);
    } else {
      const double an1 = polyval(c2, u) + m[n - 2] * rsqrt_m;
      phi = (m_norm2 - 2.0 * m[n - 1] * m[n - 1] -
             2.0 * m[n - 2] * m[n - 2]) /
            (1.0 - 2.0 * an * an - 2.0 * an1 * an1);
      a[n - 1] = an;
      a[n - 2] = an1;
      a[0] = -an;
      a[1] = -an1;
      for (std::size_t i = 2; i + 2 < n; ++i) a[i] = m[i] / std::sqrt(phi);
    }
  }

  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    numerator += a[i] * x[i];
    denominator += (x[i] - mean) * (x[i] - mean);
  }
  const double w = numerator * numerator / denominator;

  double p;
  if (n == 3) {
    constexpr double pi6 = 6.0 / std::numbers::pi;
    constexpr double stqr = 1.0471975511965976;  // asin(sqrt(3/4))
    p = std::clamp(pi6 * (std::asin(std::sqrt(w)) - stqr), 0.0, 1.0);
  } else if (n <= 11) {
    const double nf = static_cast<double>(n);
    const double g = -2.273 + 0.459 * nf;
    const double mu =
        0.5440 - 0.39978 * nf + 0.025054 * nf * nf - 0.0006714 * nf * nf * nf;
    const double sigma = std::exp(1.3822 - 0.77857 * nf + 0.062767 * nf * nf -
                                  0.0020322 * nf * nf * nf);
    const double z = (-std::log(g - std::log1p(-w)) - mu) / sigma;
    p = normal_upper_tail(z);
  } else {
    const double log_n = std::log(static_cast<double>(n));
    const double mu = -1.5861 - 0.31082 * log_n - 0.083751 * log_n * log_n +
                      0.0038915 * log_n * log_n * log_n;
    const double sigma =
        std::exp(-0.4803 - 0.082676 * log_n + 0.0030302 * log_n * log_n);
    const double z = (std::log1p(-w) - mu) / sigma;
    p = normal_upper_tail(z);
  }
  return NormalityResult{w, p, n};
}

std::vector<double> normality_of_t(int dim, double shape, std::size_t n, int k,
                                   std::size_t t_replicates,
                                   std::size_t repetitions,
                                   const RandomStream& stream, int threads) {
  if (t_replicates < 3) {
    throw ConfigError("normality_of_t requires at least 3 T replicates");
  }
  if (repetitions < 1) {
    throw ConfigError("normality_of_t requires at least one repetition");
  }
  const GGParams null_params = GGParams::canonical(dim, shape);

  std::vector<double> p_values(repetitions);
  std::vector<double> t_values(repetitions * t_replicates);
  // Flat stream indexing over (repetition, replicate) pairs; the
  // Shapiro-Wilk pass afterwards is serial and cheap.
  parallel_for(repetitions * t_replicates, threads, [&](std::size_t flat) {
    const Sample sample = sample_gg(null_params, n, stream.substream(flat));
    t_values[flat] = test_statistic(sample, shape, k, 1);
  });
  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    const std::span<const double> batch(t_values.data() + rep * t_replicates,
                                        t_replicates);
    p_values[rep] = shapiro_wilk(batch).p_value;
  }
  return p_values;
}

}  // namespace ggentropy
