#include "blochgeom/direction.hpp"

#include <cmath>
#include <sstream>

#include "blochgeom/errors.hpp"

namespace blochgeom {

namespace {

void require_unit_direction(const BasisSet& basis, const RealVector& n) {
  if (n.size() != static_cast<Eigen::Index>(basis.size())) {
    std::ostringstream msg;
    msg << "direction needs " << basis.size() << " coordinates, got " << n.size();
    throw DomainError(msg.str());
  }
  const double norm = n.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol::kUnitNorm) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "direction must be a unit vector, |n| = " << norm;
    throw DomainError(msg.str());
  }
}

}  // namespace

HermitianMatrix directional_matrix(const BasisSet& basis, const RealVector& n) {
  require_unit_direction(basis, n);
  return HermitianMatrix(basis.combine(n));
}

HermitianMatrix state_along(const BasisSet& basis, const RealVector& n, double r) {
  const HermitianMatrix t = directional_matrix(basis, n);
  const int dim = basis.dim();
  return HermitianMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim) +
                         r * t.matrix());
}

RealVector direction_of(const BasisSet& basis, const HermitianMatrix& t) {
  if (t.dim() != basis.dim()) throw DomainError("direction_of: dimension mismatch");
  if (std::abs(t.trace()) > tol::kUnitNorm) throw DomainError("direction_of: matrix is not traceless");
  const double norm = t.matrix().norm();
  if (std::abs(norm - 1.0) > tol::kUnitNorm) {
    throw DomainError("direction_of: matrix must have unit Hilbert-Schmidt norm");
  }
  return basis.coordinates(t.matrix());
}

DirectionReport direction_report(const BasisSet& basis, const RealVector& n) {
  const HermitianMatrix t = directional_matrix(basis, n);
  const int dim = basis.dim();
  RealVector mu = spectrum(t).values;
  const double mu_min = mu(mu.size() - 1);
  if (!(mu_min < 0.0)) {
    throw NumericError("direction_report: directional matrix has no negative eigenvalue");
  }
  const double max_length = 1.0 / (dim * std::abs(mu_min));
  HermitianMatrix cap(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim) +
                      max_length * t.matrix());
  Spectrum cap_spec = spectrum(cap);
  const StateClass cap_class = classify(cap);

  int multiplicity = 0;
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    if (std::abs(mu(k) - mu_min) <= tol::kMuCluster) ++multiplicity;
  }
  return DirectionReport{n, std::move(mu), max_length, std::move(cap), std::move(cap_spec),
                         cap_class, multiplicity};
}

ExtremalSpectra extremal_spectra(int dim) {
  if (dim < 2) throw DomainError("extremal_spectra: dimension must be at least 2");
  const double big = std::sqrt((dim - 1.0) / dim);
  const double small = 1.0 / std::sqrt(dim * (dim - 1.0));
  ExtremalSpectra e{RealVector::Constant(dim, -small), RealVector::Constant(dim, small)};
  e.case_a(0) = big;
  e.case_b(dim - 1) = -big;
  return e;
}

HermitianMatrix directional_matrix_of_boundary(int dim, int q) {
  if (dim < 2 || q < 1 || q > dim - 1) {
    throw DomainError("directional_matrix_of_boundary needs 1 <= q <= N-1, got N=" +
                      std::to_string(dim) + ", q=" + std::to_string(q));
  }
  const double plus = std::sqrt((dim - q) / (static_cast<double>(q) * dim));
  const double minus = -std::sqrt(q / (static_cast<double>(dim) * (dim - q)));
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) m(j, j) = j < q ? plus : minus;
  return HermitianMatrix(m);
}

}  // namespace blochgeom
