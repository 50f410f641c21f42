#include "blochgeom/stratification.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "blochgeom/errors.hpp"

namespace blochgeom {

namespace {

void require_dim(int dim) {
  if (dim < 2) throw DomainError("dimension must be at least 2, got " + std::to_string(dim));
}

}  // namespace

double distance_to_max(const DensityMatrix& rho) {
  const int n = rho.dim();
  return (rho.matrix() - ComplexMatrix::Identity(n, n) / static_cast<double>(n)).norm();
}

double stratum_radius(int dim, int p) {
  require_dim(dim);
  if (p < 1 || p > dim - 1) {
    throw DomainError("stratum index p must lie in [1, " + std::to_string(dim - 1) + "], got " +
                      std::to_string(p));
  }
  return std::sqrt(static_cast<double>(p) / (static_cast<double>(dim) * (dim - p)));
}

double large_sphere_radius(int dim) { return stratum_radius(dim, dim - 1); }

double small_sphere_radius(int dim) { return stratum_radius(dim, 1); }

DensityMatrix boundary_state(int dim, int q) {
  require_dim(dim);
  if (q < 1 || q > dim) {
    throw DomainError("R(q) needs 1 <= q <= " + std::to_string(dim) + ", got " + std::to_string(q));
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j < q; ++j) m(j, j) = 1.0 / q;
  return DensityMatrix(HermitianMatrix(m));
}

LemmaResult harriman_check(std::span<const double> a) {
  if (a.empty()) throw DomainError("harriman_check: empty tuple");
  const double sum = std::accumulate(a.begin(), a.end(), 0.0);
  if (!std::isfinite(sum) || std::abs(sum - 1.0) > tol::kUnitTrace) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "harriman_check: entries must sum to 1, got " << sum;
    throw DomainError(msg.str());
  }
  LemmaResult r{};
  r.sum_of_squares = std::inner_product(a.begin(), a.end(), a.begin(), 0.0);
  r.bound = 1.0 / static_cast<double>(a.size());
  r.slack = r.sum_of_squares - r.bound;
  r.equality = r.slack <= 1e-12;
  return r;
}

StratumReport stratum_report(const DensityMatrix& rho, double zero_tol) {
  const int n = rho.dim();
  const Spectrum s = spectrum(rho.hermitian(), zero_tol);
  if (s.zero_count >= n) {
    throw NumericError("stratum_report: all eigenvalues within zero tolerance of a unit-trace matrix");
  }
  StratumReport r{};
  r.dim = n;
  r.p = s.zero_count;
  r.distance = distance_to_max(rho);
  r.radius_p = r.p == 0 ? 0.0 : stratum_radius(n, r.p);
  r.on_sphere = std::abs(r.distance - r.radius_p) <= tol::kOnSphere;
  r.satisfied = r.p == 0 || r.distance >= r.radius_p - tol::kOnSphere;
  return r;
}

}  // namespace blochgeom
