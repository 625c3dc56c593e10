#include "ggentropy/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "ggentropy/errors.hpp"
#include "ggentropy/parallel.hpp"

namespace ggentropy {

namespace {

using Candidate = std::pair<double, std::size_t>;  // (squared distance, index)

// Shared by the brute scan and the kd-tree so both paths run the exact
// same floating-point sequence (coordinate order, no reassociation).
double squared_distance(const double* a, const double* b, std::size_t m) {
  double sum = 0.0;
  for (std::size_t d = 0; d < m; ++d) {
    const double diff = a[d] - b[d];
    sum += diff * diff;
  }
  return sum;
}

// Bounded max-heap keeping the k smallest (d2, index) pairs. The pair
// order makes the selected set, and hence the k-th distance, unique even
// when squared distances tie.
class KBest {
 public:
  explicit KBest(int k) : k_(static_cast<std::size_t>(k)) {}

  void offer(const Candidate& cand) {
    if (heap_.size() < k_) {
      heap_.push(cand);
    } else if (cand < heap_.top()) {
      heap_.pop();
      heap_.push(cand);
    }
  }

  bool full() const { return heap_.size() == k_; }
  const Candidate& worst() const { return heap_.top(); }

  void drain_sorted(std::vector<Candidate>& out) {
    out.clear();
    out.reserve(heap_.size());
    while (!heap_.empty()) {
      out.push_back(heap_.top());
      heap_.pop();
    }
    std::reverse(out.begin(), out.end());
  }

 private:
  std::size_t k_;
  std::priority_queue<Candidate> heap_;
};

void check_arity(const Sample& sample, int k) {
  if (k < 1 || static_cast<std::size_t>(k) >= sample.n()) {
    throw ArityError("k must satisfy 1 <= k <= N-1 (k=" + std::to_string(k) +
                     ", N=" + std::to_string(sample.n()) + ")");
  }
}

}  // namespace

NeighborDistances knn_distances_brute(const Sample& sample, int k) {
  check_arity(sample, k);
  require_no_duplicate_rows(sample);
  const std::size_t n = sample.n();
  const std::size_t m = sample.dim();
  const double* coords = sample.coords().data();

  NeighborDistances result;
  result.k = k;
  result.distances.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    KBest best(k);
    const double* xi = coords + i * m;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      best.offer({squared_distance(xi, coords + j * m, m), j});
    }
    result.distances[i] = std::sqrt(best.worst().first);
  }
  return result;
}

struct KdTree::Impl {
  struct Node {
    int split_dim = -1;          // -1 marks a leaf
    double split_value = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::uint32_t begin = 0;     // leaf range into `order`
    std::uint32_t end = 0;
  };

  const double* coords = nullptr;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::uint32_t> order;
  std::vector<Node> nodes;
  static constexpr std::size_t leaf_size = 16;

  double coord(std::uint32_t idx, std::size_t d) const {
    return coords[idx * m + d];
  }

  std::int32_t build(std::size_t begin, std::size_t end) {
    const std::int32_t id = static_cast<std::int32_t>(nodes.size());
    nodes.emplace_back();
    if (end - begin <= leaf_size) {
      nodes[id].begin = static_cast<std::uint32_t>(begin);
      nodes[id].end = static_cast<std::uint32_t>(end);
      return id;
    }
    // Widest-spread dimension; median coordinate as the split plane.
    std::size_t split_dim = 0;
    double best_spread = -1.0;
    for (std::size_t d = 0; d < m; ++d) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (std::size_t p = begin; p < end; ++p) {
        const double c = coord(order[p], d);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      if (hi - lo > best_spread) {
        best_spread = hi - lo;
        split_dim = d;
      }
    }
    const std::size_t mid = begin + (end - begin) / 2;
    std::nth_element(order.begin() + begin, order.begin() + mid,
                     order.begin() + end,
                     [&](std::uint32_t a, std::uint32_t b) {
                       const double ca = coord(a, split_dim);
                       const double cb = coord(b, split_dim);
                       return ca < cb || (ca == cb && a < b);
                     });
    const double split_value = coord(order[mid], split_dim);
    nodes[id].split_dim = static_cast<int>(split_dim);
    nodes[id].split_value = split_value;
    const std::int32_t left = build(begin, mid);
    const std::int32_t right = build(mid, end);
    nodes[id].left = left;
    nodes[id].right = right;
    return id;
  }

  void search(std::int32_t node_id, const double* query, std::size_t self,
              KBest& best) const {
    const Node& node = nodes[node_id];
    if (node.split_dim < 0) {
      for (std::uint32_t p = node.begin; p < node.end; ++p) {
        const std::uint32_t j = order[p];
        if (j == self) continue;
        best.offer({squared_distance(query, coords + j * m, m), j});
      }
      return;
    }
    const double delta = query[node.split_dim] - node.split_value;
    const std::int32_t near = delta < 0.0 ? node.left : node.right;
    const std::int32_t far = delta < 0.0 ? node.right : node.left;
    search(near, query, self, best);
    // The axis offset lower-bounds every distance beyond the plane, so
    // pruning can never discard a point the brute scan would keep; ties
    // must still be visited because a smaller index can win.
    const double axis_d2 = delta * delta;
    if (!best.full() || axis_d2 <= best.worst().first) {
      search(far, query, self, best);
    }
  }
};

KdTree::KdTree(const Sample& sample) : impl_(std::make_unique<Impl>()) {
  impl_->coords = sample.coords().data();
  impl_->n = sample.n();
  impl_->m = sample.dim();
  impl_->order.resize(sample.n());
  std::iota(impl_->order.begin(), impl_->order.end(), 0u);
  impl_->nodes.reserve(2 * sample.n() / Impl::leaf_size + 2);
  impl_->build(0, sample.n());
}

KdTree::~KdTree() = default;
KdTree::KdTree(KdTree&&) noexcept = default;
KdTree& KdTree::operator=(KdTree&&) noexcept = default;

void KdTree::query_knn(std::size_t query_index, int k,
                       std::vector<Candidate>& out) const {
  if (k < 1 || static_cast<std::size_t>(k) >= impl_->n) {
    throw ArityError("kd-tree query requires 1 <= k <= N-1");
  }
  KBest best(k);
  impl_->search(0, impl_->coords + query_index * impl_->m, query_index, best);
  best.drain_sorted(out);
}

NeighborDistances knn_distances_indexed(const Sample& sample, int k,
                                        int threads) {
  check_arity(sample, k);
  require_no_duplicate_rows(sample);
  const KdTree tree(sample);

  NeighborDistances result;
  result.k = k;
  result.distances.resize(sample.n());
  parallel_for(sample.n(), threads, [&](std::size_t i) {
    thread_local std::vector<Candidate> scratch;
    tree.query_knn(i, k, scratch);
    result.distances[i] = std::sqrt(scratch.back().first);
  });
  return result;
}

}  // namespace ggentropy
