#include "blochgeom/basis.hpp"

#include <algorithm>
#include <cmath>

#include "blochgeom/errors.hpp"

namespace blochgeom {

BasisSet::BasisSet(int dim, std::vector<ComplexMatrix> elements)
    : dim_(dim), elements_(std::move(elements)) {}

ComplexMatrix BasisSet::combine(const RealVector& coeffs) const {
  ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    out += coeffs(static_cast<Eigen::Index>(j)) * elements_[j];
  }
  return out;
}

RealVector BasisSet::coordinates(const ComplexMatrix& m) const {
  RealVector out(static_cast<Eigen::Index>(elements_.size()));
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    out(static_cast<Eigen::Index>(j)) = trace_of_product(m, elements_[j]).real();
  }
  return out;
}

BasisSet build_basis(int dim) {
  if (dim < 2) {
    throw DomainError("basis dimension must be at least 2, got " + std::to_string(dim));
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<ComplexMatrix> elements;
  elements.reserve(static_cast<std::size_t>(bloch_size(dim)));

  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
      m(j, k) = inv_sqrt2;
      m(k, j) = inv_sqrt2;
      elements.push_back(std::move(m));
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
      m(j, k) = Complex(0.0, -inv_sqrt2);
      m(k, j) = Complex(0.0, inv_sqrt2);
      elements.push_back(std::move(m));
    }
  }
  // diag(1, ..., 1, -l, 0, ...) has squared norm l + l^2.
  for (int l = 1; l < dim; ++l) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (int j = 0; j < l; ++j) m(j, j) = scale;
    m(l, l) = -l * scale;
    elements.push_back(std::move(m));
  }
  return BasisSet(dim, std::move(elements));
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Count: return "count";
    case Violation::Kind::Shape: return "shape";
    case Violation::Kind::Hermiticity: return "hermiticity";
    case Violation::Kind::Trace: return "trace";
    case Violation::Kind::Gram: return "gram";
  }
  return "unknown";
}

double ValidationReport::max_magnitude(Violation::Kind kind) const {
  double worst = 0.0;
  for (const auto& v : violations) {
    if (v.kind == kind) worst = std::max(worst, v.magnitude);
  }
  return worst;
}

ValidationReport verify_basis(const BasisSet& basis) {
  ValidationReport report;
  const int dim = basis.dim();
  const std::size_t expected = dim >= 1 ? static_cast<std::size_t>(bloch_size(dim)) : 0;
  if (basis.size() != expected) {
    const double diff = std::abs(static_cast<double>(basis.size()) - static_cast<double>(expected));
    report.violations.push_back({Violation::Kind::Count, basis.size(), expected, diff});
  }

  std::vector<std::size_t> well_shaped;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const ComplexMatrix& e = basis[j];
    if (e.rows() != dim || e.cols() != dim) {
      report.violations.push_back({Violation::Kind::Shape, j, j,
                                   std::abs(static_cast<double>(e.rows() * e.cols() - dim * dim))});
      continue;
    }
    well_shaped.push_back(j);
    const double herm = (e - e.adjoint()).cwiseAbs().maxCoeff();
    if (herm > basis_tol::kHermitian) {
      report.violations.push_back({Violation::Kind::Hermiticity, j, j, herm});
    }
    const double tr = std::abs(e.trace());
    if (tr > basis_tol::kTrace) {
      report.violations.push_back({Violation::Kind::Trace, j, j, tr});
    }
  }

  for (std::size_t a = 0; a < well_shaped.size(); ++a) {
    for (std::size_t b = a; b < well_shaped.size(); ++b) {
      const std::size_t j = well_shaped[a];
      const std::size_t k = well_shaped[b];
      const Complex g = trace_of_product(basis[j], basis[k]);
      const double dev = std::abs(g - Complex(j == k ? 1.0 : 0.0, 0.0));
      if (dev > basis_tol::kGram) {
        report.violations.push_back({Violation::Kind::Gram, j, k, dev});
      }
    }
  }
  return report;
}

}  // namespace blochgeom
