#pragma once

#include "blochgeom/basis.hpp"
#include "blochgeom/state.hpp"

namespace blochgeom {

/// rho_a = (1/N) 1 - r T_n, the state at length r along -n.
HermitianMatrix antipodal_state(const BasisSet& basis, const RealVector& n, double r);

/// sqrt(q / (N (N - q))), the longest positive Bloch length opposite R(q).
double max_antipodal_length(int dim, int q);

struct AntipodeReport {
  int dim;
  int q;
  DensityMatrix direction_state;  // R(q)
  double max_antipodal_length;
  DensityMatrix antipodal_cap;
  double spectral_deviation;  // max |lambda_k(cap) - lambda_k(R(N-q))|
  bool matches_R_p;
};

/// Builds the cap (1/N) 1 - max_antipodal_length * T_n with T_n the
/// directional matrix of R(q), and compares its spectrum with R(N-q).
AntipodeReport antipode_of_boundary(int dim, int q);

struct AntipodalFamilyMember {
  HermitianMatrix state;
  StateClass state_class;
};

/// Diagonal antipode of R(q) at length r: q entries 1/N - r sqrt((N-q)/(qN))
/// and N-q entries 1/N + r sqrt(q/(N(N-q))). Formed directly, not through a basis.
AntipodalFamilyMember antipodal_family(int dim, int q, double r, double zero_tol = tol::kZero);

}  // namespace blochgeom
