#include "ggentropy/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ggentropy/errors.hpp"

namespace ggentropy {

Sample::Sample(std::size_t n, std::size_t dim)
    : coords_(n * dim, 0.0), n_(n), dim_(dim) {
  if (n == 0 || dim == 0) throw DomainError("Sample requires n >= 1, dim >= 1");
}

Sample::Sample(std::vector<double> coords, std::size_t dim)
    : coords_(std::move(coords)), dim_(dim) {
  if (dim == 0) throw DomainError("Sample requires dim >= 1");
  if (coords_.empty() || coords_.size() % dim != 0) {
    throw DomainError("Sample coordinate count must be a positive multiple of dim");
  }
  n_ = coords_.size() / dim;
  validate();
}

void Sample::scale(double a) {
  if (!std::isfinite(a)) throw DomainError("scale factor must be finite");
  for (double& x : coords_) x *= a;
}

double Sample::row_norm(std::size_t i) const {
  double norm2 = 0.0;
  for (double x : row(i)) norm2 += x * x;
  return std::sqrt(norm2);
}

void Sample::validate() const {
  for (double x : coords_) {
    if (!std::isfinite(x)) {
      throw DomainError("Sample contains a non-finite coordinate");
    }
  }
}

std::optional<std::pair<std::size_t, std::size_t>> find_duplicate_rows(
    const Sample& sample) {
  const std::size_t n = sample.n();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ra = sample.row(a);
    const auto rb = sample.row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(),
                                        rb.end());
  });
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto ra = sample.row(order[i]);
    const auto rb = sample.row(order[i + 1]);
    if (std::equal(ra.begin(), ra.end(), rb.begin())) {
      auto pair = std::minmax(order[i], order[i + 1]);
      if (!best || pair < *best) best = pair;
    }
  }
  return best;
}

void require_no_duplicate_rows(const Sample& sample) {
  if (auto dup = find_duplicate_rows(sample)) {
    throw DuplicatePointsError(dup->first, dup->second);
  }
}

}  // namespace ggentropy
