#pragma once

#include <cstdint>
#include <span>

namespace ggentropy {

// Identifies one reproducible stream of random draws. The same
// (master_seed, stream_id) pair yields bit-identical draws regardless of
// thread count or scheduling; independent work units (Monte-Carlo
// replicates, experiment repetitions) each get their own derived stream.
struct RandomStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  // Stream for sub-unit j, a hash of (stream_id, j).
  RandomStream substream(std::uint64_t j) const;
};

// Counter-based generator: draw i is a bijective 64-bit mix of
// key + i * golden_gamma, where the key is a hash of (seed, stream).
// Splittable and stateless apart from the counter, so replicates can be
// assigned to worker threads in any order.
class Rng {
 public:
  explicit Rng(const RandomStream& stream);

  std::uint64_t next_u64();

  // Uniform on the open interval (0, 1); never returns an endpoint.
  double uniform01();

  // Standard normal via Box-Muller; draws come in pairs, the second is cached.
  double normal();

  // Gamma(shape, scale) by Marsaglia-Tsang squeeze, with the usual
  // boost U^(1/shape) for shape < 1.
  double gamma(double shape, double scale);

  // Fills `out` with an isotropic standard normal vector.
  void normal_vector(std::span<double> out);

  // Uniform direction on the unit sphere S^(m-1), m = out.size().
  void unit_sphere(std::span<double> out);

  std::uint64_t poisson(double mean);

 private:
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace ggentropy
