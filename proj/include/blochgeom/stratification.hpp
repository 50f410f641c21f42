#pragma once

#include <span>

#include "blochgeom/state.hpp"

namespace blochgeom {

/// Hilbert-Schmidt distance sqrt(Tr{(rho - rho_max)^2}).
double distance_to_max(const DensityMatrix& rho);

/// r_p = sqrt(p / (N (N - p))) for 1 <= p <= N-1.
double stratum_radius(int dim, int p);

/// R_L = sqrt((N-1)/N); every state lies on or inside it.
double large_sphere_radius(int dim);

/// R_S = sqrt(1/(N(N-1))); every unit-trace Hermitian matrix strictly inside is a state.
double small_sphere_radius(int dim);

/// R(q) = diag(1/q, ..., 1/q, 0, ..., 0) with q leading entries, 1 <= q <= N.
DensityMatrix boundary_state(int dim, int q);

struct LemmaResult {
  double sum_of_squares;  // A
  double bound;           // 1/n
  double slack;           // A - 1/n
  bool equality;
};

/// For reals summing to one (signs unrestricted): A = sum a_j^2 >= 1/n,
/// with equality only for the uniform tuple.
LemmaResult harriman_check(std::span<const double> a);

struct StratumReport {
  int dim;
  int p;
  double distance;
  double radius_p;  // 0 when p == 0
  bool on_sphere;
  bool satisfied;

  double slack() const { return distance - radius_p; }
};

StratumReport stratum_report(const DensityMatrix& rho, double zero_tol = tol::kZero);

}  // namespace blochgeom
