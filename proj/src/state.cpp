#include "blochgeom/state.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "blochgeom/errors.hpp"

namespace blochgeom {

namespace {

void require_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    std::ostringstream msg;
    msg << "matrix must be square and non-empty, got " << m.rows() << "x" << m.cols();
    throw DomainError(msg.str());
  }
}

void require_unit_trace(const HermitianMatrix& m, const char* op) {
  const double tr = m.trace();
  if (std::abs(tr - 1.0) > tol::kUnitTrace) {
    std::ostringstream msg;
    msg.precision(17);
    msg << op << ": trace must be 1, got " << tr;
    throw DomainError(msg.str());
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  require_square(m);
  if (!m.allFinite()) throw DomainError("matrix has non-finite entries");
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol::kHermitian) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |m - m^dagger| = " << asym;
    throw DomainError(msg.str());
  }
  m_ = 0.5 * (m + m.adjoint());
}

DensityMatrix::DensityMatrix(HermitianMatrix m) : m_(std::move(m)) {
  const double tr = m_.trace();
  if (std::abs(tr - 1.0) > tol::kDensityTrace) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density matrix trace must be 1, got " << tr;
    throw DomainError(msg.str());
  }
  const double lambda_min = spectrum(m_).min();
  if (lambda_min < -tol::kPsd) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density matrix is not positive semidefinite: lambda_min = " << lambda_min;
    throw DomainError(msg.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw DomainError("dimension must be positive");
  return DensityMatrix(HermitianMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim)));
}

BlochVector::BlochVector(int dim, RealVector coords) : dim_(dim), coords_(std::move(coords)) {
  if (dim < 2) throw DomainError("Bloch vector dimension must be at least 2");
  if (coords_.size() != bloch_size(dim)) {
    std::ostringstream msg;
    msg << "Bloch vector for N=" << dim << " needs " << bloch_size(dim) << " coordinates, got "
        << coords_.size();
    throw DomainError(msg.str());
  }
  if (!coords_.allFinite()) throw DomainError("Bloch vector has non-finite coordinates");
}

std::string StateClass::to_string() const {
  switch (kind_) {
    case Kind::PositiveInterior: return "POSITIVE_INTERIOR";
    case Kind::Boundary: return "BOUNDARY(" + std::to_string(p_) + ")";
    case Kind::Nonpositive: return "NONPOSITIVE";
  }
  return "UNKNOWN";
}

HermitianMatrix from_bloch(const BasisSet& basis, const BlochVector& v) {
  if (v.dim() != basis.dim()) {
    throw DomainError("from_bloch: Bloch vector dimension " + std::to_string(v.dim()) +
                      " does not match basis dimension " + std::to_string(basis.dim()));
  }
  const int n = basis.dim();
  ComplexMatrix m = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
  m += basis.combine(v.coords());
  return HermitianMatrix(m);
}

BlochVector to_bloch(const BasisSet& basis, const HermitianMatrix& m) {
  if (m.dim() != basis.dim()) {
    throw DomainError("to_bloch: matrix dimension " + std::to_string(m.dim()) +
                      " does not match basis dimension " + std::to_string(basis.dim()));
  }
  require_unit_trace(m, "to_bloch");
  return BlochVector(basis.dim(), basis.coordinates(m.matrix()));
}

Spectrum spectrum(const HermitianMatrix& m, double zero_tol) {
  if (!(zero_tol > 0.0)) throw DomainError("zero tolerance must be positive");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "Hermitian eigensolver did not converge (N=" << m.dim()
        << ", max |entry| = " << m.matrix().cwiseAbs().maxCoeff() << ")";
    throw NumericError(msg.str());
  }
  Spectrum s;
  s.values = solver.eigenvalues().reverse();
  for (Eigen::Index k = 0; k < s.values.size(); ++k) {
    if (std::abs(s.values(k)) <= zero_tol) ++s.zero_count;
  }
  return s;
}

double purity(const HermitianMatrix& m) { return m.matrix().squaredNorm(); }

StateClass classify(const HermitianMatrix& m, double zero_tol) {
  require_unit_trace(m, "classify");
  const Spectrum s = spectrum(m, zero_tol);
  if (s.min() < -zero_tol) return StateClass::nonpositive();
  if (s.zero_count > 0) return StateClass::boundary(s.zero_count);
  return StateClass::positive_interior();
}

}  // namespace blochgeom
