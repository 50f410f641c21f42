#include "blochgeom/antipode.hpp"

#include <cmath>

#include "blochgeom/direction.hpp"
#include "blochgeom/errors.hpp"
#include "blochgeom/stratification.hpp"

namespace blochgeom {

namespace {

void require_q(int dim, int q) {
  if (dim < 2 || q < 1 || q > dim - 1) {
    throw DomainError("antipode needs N >= 2 and 1 <= q <= N-1, got N=" + std::to_string(dim) +
                      ", q=" + std::to_string(q));
  }
}

void require_length(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("Bloch length must be finite and >= 0");
}

}  // namespace

HermitianMatrix antipodal_state(const BasisSet& basis, const RealVector& n, double r) {
  require_length(r);
  const HermitianMatrix t = directional_matrix(basis, n);
  const int dim = basis.dim();
  return HermitianMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim) -
                         r * t.matrix());
}

double max_antipodal_length(int dim, int q) {
  require_q(dim, q);
  return std::sqrt(q / (static_cast<double>(dim) * (dim - q)));
}

AntipodeReport antipode_of_boundary(int dim, int q) {
  require_q(dim, q);
  const double length = max_antipodal_length(dim, q);
  const HermitianMatrix t = directional_matrix_of_boundary(dim, q);
  DensityMatrix cap(HermitianMatrix(
      ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim) - length * t.matrix()));

  const Spectrum cap_spec = spectrum(cap.hermitian());
  const Spectrum target = spectrum(boundary_state(dim, dim - q).hermitian());
  const double deviation = (cap_spec.values - target.values).cwiseAbs().maxCoeff();
  const bool matches = deviation <= 1e-12 && cap_spec.zero_count == q;
  return AntipodeReport{dim, q, boundary_state(dim, q), length, std::move(cap), deviation, matches};
}

AntipodalFamilyMember antipodal_family(int dim, int q, double r, double zero_tol) {
  require_q(dim, q);
  require_length(r);
  const double shrink = r * std::sqrt((dim - q) / (static_cast<double>(q) * dim));
  const double grow = r * std::sqrt(q / (static_cast<double>(dim) * (dim - q)));
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) m(j, j) = 1.0 / dim + (j < q ? -shrink : grow);
  HermitianMatrix h(m);
  const StateClass c = classify(h, zero_tol);
  return AntipodalFamilyMember{std::move(h), c};
}

}  // namespace blochgeom
