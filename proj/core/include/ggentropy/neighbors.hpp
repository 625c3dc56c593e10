#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "ggentropy/sample.hpp"

namespace ggentropy {

// rho_k(X_i, X_N) for every i: the Euclidean distance from X_i to its k-th
// nearest neighbour among the other sample points. Entries are strictly
// positive; duplicate points are rejected before any search runs.
struct NeighborDistances {
  int k = 0;
  std::vector<double> distances;
};

// O(N^2 m) reference scan. Candidate neighbours are ordered by
// (squared distance, point index), so results are fully deterministic
// even under exact distance ties.
NeighborDistances knn_distances_brute(const Sample& sample, int k);

// kd-tree fast path. Produces bitwise-identical distances to
// knn_distances_brute on every input: the same squared-distance kernel,
// the same (distance, index) tie order, exact branch-and-bound pruning.
NeighborDistances knn_distances_indexed(const Sample& sample, int k,
                                        int threads = 0);

// Exact kd-tree over a sample, splitting at the median coordinate of the
// widest-spread dimension. Immutable once built; concurrent queries are
// safe.
class KdTree {
 public:
  explicit KdTree(const Sample& sample);
  ~KdTree();
  KdTree(KdTree&&) noexcept;
  KdTree& operator=(KdTree&&) noexcept;
  KdTree(const KdTree&) = delete;
  KdTree& operator=(const KdTree&) = delete;

  // k nearest neighbours of sample row `query_index` (itself excluded),
  // as (squared distance, index) pairs sorted ascending.
  void query_knn(std::size_t query_index, int k,
                 std::vector<std::pair<double, std::size_t>>& out) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ggentropy
