#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blochgeom/types.hpp"

namespace blochgeom {

/// Ordered orthonormal traceless Hermitian basis {T_j} of the N x N
/// Hermitian matrices, identity direction excluded. Immutable.
///
/// The constructor performs no validation; use verify_basis() to test an
/// arbitrary element list against the invariants.
class BasisSet {
 public:
  BasisSet(int dim, std::vector<ComplexMatrix> elements);

  int dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  const ComplexMatrix& operator[](std::size_t j) const { return elements_[j]; }
  const std::vector<ComplexMatrix>& elements() const { return elements_; }

  /// Sum_j c_j T_j.
  ComplexMatrix combine(const RealVector& coeffs) const;
  /// Re Tr{m T_j} for every j.
  RealVector coordinates(const ComplexMatrix& m) const;

 private:
  int dim_;
  std::vector<ComplexMatrix> elements_;
};

/// Generalized Gell-Mann basis, Hilbert-Schmidt normalized.
///
/// Order: symmetric E_jk + E_kj for j < k (lexicographic), then antisymmetric
/// -i(E_jk - E_kj) in the same order, then the N-1 diagonal matrices
/// diag(1,...,1,-l,0,...,0) for l = 1..N-1. Each is scaled so Tr{T^2} = 1.
/// Throws DomainError for dim < 2.
BasisSet build_basis(int dim);

struct Violation {
  enum class Kind { Count, Shape, Hermiticity, Trace, Gram };
  Kind kind;
  std::size_t row;  // element index (Gram: first element)
  std::size_t col;  // Gram: second element; otherwise equal to row
  double magnitude;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  double max_magnitude(Violation::Kind kind) const;
};

namespace basis_tol {
inline constexpr double kHermitian = 1e-14;
inline constexpr double kTrace = 1e-14;
inline constexpr double kGram = 1e-12;
}  // namespace basis_tol

/// Checks count, shape, hermiticity, tracelessness and Hilbert-Schmidt
/// orthonormality. Never throws.
ValidationReport verify_basis(const BasisSet& basis);

}  // namespace blochgeom
