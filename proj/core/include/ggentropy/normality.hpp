#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ggentropy/random.hpp"

namespace ggentropy {

struct NormalityResult {
  double w = 0.0;  // Shapiro-Wilk W, in (0, 1]
  double p_value = 0.0;
  std::size_t n = 0;
};

// Shapiro-Wilk test of normality, Royston's approximation, valid for
// 3 <= n <= 5000. One-sided: small W rejects.
NormalityResult shapiro_wilk(std::span<const double> values);

// The empirical-normality study of the statistic T: for each of M
// repetitions, simulates `t_replicates` values of T_{N,k} under the null
// GG(m, s) and returns the Shapiro-Wilk p-value of that batch.
std::vector<double> normality_of_t(int dim, double shape, std::size_t n, int k,
                                   std::size_t t_replicates,
                                   std::size_t repetitions,
                                   const RandomStream& stream,
                                   int threads = 0);

}  // namespace ggentropy
