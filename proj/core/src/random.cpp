#include "ggentropy/random.hpp"

#include <cmath>
#include <numbers>

#include "ggentropy/errors.hpp"

namespace ggentropy {

namespace {

constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

// Stafford "mix13" finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
  return mix64(mix64(seed + golden_gamma) ^ mix64(stream + 2 * golden_gamma));
}

}  // namespace

RandomStream RandomStream::substream(std::uint64_t j) const {
  return RandomStream{master_seed, mix64(stream_id ^ mix64(j + golden_gamma))};
}

Rng::Rng(const RandomStream& stream)
    : state_(derive_key(stream.master_seed, stream.stream_id)) {}

std::uint64_t Rng::next_u64() {
  state_ += golden_gamma;
  return mix64(state_);
}

double Rng::uniform01() {
  // 53-bit mantissa at bin centers, so u is never 0 or 1 and log(u) is safe.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

double Rng::gamma(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw DomainError("gamma requires shape > 0 and scale > 0");
  }
  if (shape < 1.0) {
    const double g = gamma(shape + 1.0, 1.0);
    return scale * g * std::pow(uniform01(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return scale * d * v;
    }
  }
}

void Rng::normal_vector(std::span<double> out) {
  for (double& x : out) x = normal();
}

void Rng::unit_sphere(std::span<double> out) {
  for (;;) {
    normal_vector(out);
    double norm2 = 0.0;
    for (double x : out) norm2 += x * x;
    if (norm2 > 0.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& x : out) x *= inv;
      return;
    }
  }
}

std::uint64_t Rng::poisson(double mean) {
  if (!(mean >= 0.0)) throw DomainError("poisson requires mean >= 0");
  // Exponential interarrival count: exact for any mean, linear cost.
  std::uint64_t count = 0;
  double total = 0.0;
  for (;;) {
    total += -std::log(uniform01());
    if (total > mean) return count;
    ++count;
  }
}

}  // namespace ggentropy
