#pragma once

#include <complex>

#include <Eigen/Dense>

namespace blochgeom {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
// Eigenvalues with |lambda| at or below this count as zero.
inline constexpr double kZero = 1e-9;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kUnitTrace = 1e-10;
inline constexpr double kDensityTrace = 1e-12;
inline constexpr double kPsd = 1e-10;
inline constexpr double kUnitNorm = 1e-10;
inline constexpr double kOnSphere = 1e-9;
inline constexpr double kMuCluster = 1e-8;
}  // namespace tol

/// Number of Bloch coordinates for an N-level system.
constexpr int bloch_size(int dim) { return dim * dim - 1; }

/// Tr{a b} without forming the product.
inline Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace blochgeom
