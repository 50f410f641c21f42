#pragma once

#include "blochgeom/basis.hpp"
#include "blochgeom/state.hpp"

namespace blochgeom {

/// T_n = sum_i n_i T_i for a unit vector n (|n| = 1 within tol::kUnitNorm).
/// Traceless with Tr{T_n^2} = 1.
HermitianMatrix directional_matrix(const BasisSet& basis, const RealVector& n);

/// (1/N) 1 + r T_n.
HermitianMatrix state_along(const BasisSet& basis, const RealVector& n, double r);

/// Unit direction n with T_n equal to the given traceless, unit-norm matrix.
RealVector direction_of(const BasisSet& basis, const HermitianMatrix& t);

struct DirectionReport {
  RealVector n;
  RealVector mu;      // spectrum of T_n, descending
  double max_length;  // 1 / (N |mu_N|)
  HermitianMatrix cap_state;  // (1/N) 1 + max_length T_n
  Spectrum cap_spectrum;
  StateClass cap_state_class;
  int cap_zero_count;  // multiplicity of mu_N, clustered at tol::kMuCluster

  double mu_max() const { return mu(0); }
  double mu_min() const { return mu(mu.size() - 1); }
};

DirectionReport direction_report(const BasisSet& basis, const RealVector& n);

struct ExtremalSpectra {
  RealVector case_a;  // (sqrt((N-1)/N), -1/sqrt(N(N-1)) x (N-1))
  RealVector case_b;  // (1/sqrt(N(N-1)) x (N-1), -sqrt((N-1)/N))
};

ExtremalSpectra extremal_spectra(int dim);

/// Diagonal T_n with R(q) = (1/N) 1 + |V_R(q)| T_n: q entries sqrt((N-q)/(qN))
/// followed by N-q entries -sqrt(q/(N(N-q))). Requires 1 <= q <= N-1.
HermitianMatrix directional_matrix_of_boundary(int dim, int q);

}  // namespace blochgeom
