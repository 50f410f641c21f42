#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "blochgeom/state.hpp"

namespace blochgeom {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Random stream that is a pure function of its key. Each sample index gets
/// its own stream, so results do not depend on evaluation order.
class Substream {
 public:
  /// Key words are folded through mix64 in order.
  Substream(std::initializer_list<std::uint64_t> key);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();
  /// (x + i y)/sqrt(2) with x, y standard normal: E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct SamplerConfig {
  std::uint64_t seed = 0;
  int dim = 2;
  int rank = 1;
  std::size_t count = 0;

  /// Throws DomainError unless dim >= 2 and 1 <= rank <= dim.
  void validate() const;
};

/// rho = G G^dagger / Tr{G G^dagger} with G an N x k complex Ginibre matrix.
/// Rank k almost surely; Hilbert-Schmidt distributed when k = N.
DensityMatrix sample_state(const SamplerConfig& cfg, std::uint64_t index);

/// Uniform point on the unit sphere in R^dim_v (normalized Gaussian vector).
RealVector sample_direction(std::uint64_t seed, int dim_v, std::uint64_t index);

/// Uniform point strictly inside the ball of the given radius in R^dim_v,
/// dim_v = N^2 - 1. Direction times radius * u^(1/dim_v), u in [0,1).
BlochVector sample_bloch_in_ball(std::uint64_t seed, int dim_v, double radius,
                                 std::uint64_t index);

/// n reals with unit sum: centered Gaussians shifted by 1/n. Signs are mixed.
std::vector<double> sample_unit_sum_tuple(std::uint64_t seed, int n, std::uint64_t index);

}  // namespace blochgeom
