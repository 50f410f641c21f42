#include "blochgeom/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "blochgeom/errors.hpp"

namespace blochgeom {

namespace {

constexpr std::uint64_t kStateSalt = 0x73746174652d6b31ULL;
constexpr std::uint64_t kDirectionSalt = 0x6469726563742d31ULL;
constexpr std::uint64_t kBallSalt = 0x62616c6c2d6e2d31ULL;
constexpr std::uint64_t kTupleSalt = 0x7475706c652d6e31ULL;
constexpr int kMaxRetries = 16;

std::uint64_t fold_key(std::initializer_list<std::uint64_t> key) {
  std::uint64_t h = 0x243F6A8885A308D3ULL;
  for (std::uint64_t k : key) h = mix64(h ^ mix64(k));
  return h;
}

RealVector gaussian_unit_vector(Substream& rng, int size) {
  RealVector v(size);
  for (int i = 0; i < size; ++i) v(i) = rng.normal();
  const double norm = v.norm();
  if (!(norm > 0.0)) return RealVector();
  return v / norm;
}

}  // namespace

Substream::Substream(std::initializer_list<std::uint64_t> key) : engine_(fold_key(key)) {}

double Substream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Substream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Substream::complex_normal() {
  const double x = normal();
  const double y = normal();
  return Complex(x, y) * std::numbers::sqrt2 * 0.5;
}

void SamplerConfig::validate() const {
  if (dim < 2) throw DomainError("sampler dimension must be at least 2, got " + std::to_string(dim));
  if (rank < 1 || rank > dim) {
    throw DomainError("sampler rank must lie in [1, " + std::to_string(dim) + "], got " +
                      std::to_string(rank));
  }
}

DensityMatrix sample_state(const SamplerConfig& cfg, std::uint64_t index) {
  cfg.validate();
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Substream rng{cfg.seed, kStateSalt, static_cast<std::uint64_t>(cfg.dim),
                  static_cast<std::uint64_t>(cfg.rank), index, static_cast<std::uint64_t>(attempt)};
    ComplexMatrix g(cfg.dim, cfg.rank);
    for (int c = 0; c < cfg.rank; ++c) {
      for (int r = 0; r < cfg.dim; ++r) g(r, c) = rng.complex_normal();
    }
    ComplexMatrix w = g * g.adjoint();
    const double tr = w.trace().real();
    if (!(tr > 0.0) || !std::isfinite(tr)) continue;
    return DensityMatrix(HermitianMatrix(w / tr));
  }
  throw NumericError("sample_state: degenerate Ginibre draws exhausted retries at index " +
                     std::to_string(index));
}

RealVector sample_direction(std::uint64_t seed, int dim_v, std::uint64_t index) {
  if (dim_v < 3) throw DomainError("sample_direction: dimension must be at least 3");
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Substream rng{seed, kDirectionSalt, static_cast<std::uint64_t>(dim_v), index,
                  static_cast<std::uint64_t>(attempt)};
    RealVector n = gaussian_unit_vector(rng, dim_v);
    if (n.size() == dim_v) return n;
  }
  throw NumericError("sample_direction: zero Gaussian vector");
}

BlochVector sample_bloch_in_ball(std::uint64_t seed, int dim_v, double radius,
                                 std::uint64_t index) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("sample_bloch_in_ball: radius must be positive");
  }
  const int dim = static_cast<int>(std::lround(std::sqrt(dim_v + 1.0)));
  if (dim < 2 || dim * dim - 1 != dim_v) {
    throw DomainError("sample_bloch_in_ball: dim_v must equal N^2 - 1, got " + std::to_string(dim_v));
  }
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Substream rng{seed, kBallSalt, static_cast<std::uint64_t>(dim_v), index,
                  static_cast<std::uint64_t>(attempt)};
    RealVector n = gaussian_unit_vector(rng, dim_v);
    if (n.size() != dim_v) continue;
    RealVector v = radius * std::pow(rng.uniform(), 1.0 / dim_v) * n;
    // pow can round up to exactly 1 for u close to 1
    if (v.norm() < radius) return BlochVector(dim, std::move(v));
  }
  throw NumericError("sample_bloch_in_ball: exhausted retries");
}

std::vector<double> sample_unit_sum_tuple(std::uint64_t seed, int n, std::uint64_t index) {
  if (n < 1) throw DomainError("sample_unit_sum_tuple: n must be positive");
  Substream rng{seed, kTupleSalt, static_cast<std::uint64_t>(n), index};
  std::vector<double> a(static_cast<std::size_t>(n));
  double mean = 0.0;
  for (double& x : a) {
    x = rng.normal();
    mean += x;
  }
  mean /= n;
  for (double& x : a) x = x - mean + 1.0 / n;
  return a;
}

}  // namespace blochgeom
