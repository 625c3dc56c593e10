#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ggentropy {

// N observations in R^m, row-major. Row i is observation X_i. All
// coordinates are finite; N >= 1 and m >= 1.
class Sample {
 public:
  Sample(std::size_t n, std::size_t dim);
  Sample(std::vector<double> coords, std::size_t dim);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return dim_; }

  std::span<const double> row(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<double> row(std::size_t i) {
    return {coords_.data() + i * dim_, dim_};
  }

  double at(std::size_t i, std::size_t j) const { return coords_[i * dim_ + j]; }
  double& at(std::size_t i, std::size_t j) { return coords_[i * dim_ + j]; }

  const std::vector<double>& coords() const { return coords_; }

  // X -> a X.
  void scale(double a);

  // Euclidean norm of row i.
  double row_norm(std::size_t i) const;

  // Re-checks that every coordinate is finite (used after file input).
  void validate() const;

 private:
  std::vector<double> coords_;
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
};

// First pair of exactly equal rows (lowest indices), or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> find_duplicate_rows(
    const Sample& sample);

// Throws DuplicatePointsError naming the offending rows, if any.
void require_no_duplicate_rows(const Sample& sample);

}  // namespace ggentropy
