#pragma once

#include <string>

#include "blochgeom/basis.hpp"
#include "blochgeom/types.hpp"

namespace blochgeom {

/// Complex square matrix equal to its conjugate transpose within
/// tol::kHermitian. Stored Hermitian-symmetrized, (m + m^dagger)/2.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

 private:
  ComplexMatrix m_;
};

/// Unit-trace, positive semidefinite (lambda_min >= -tol::kPsd) Hermitian matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianMatrix m);

  /// rho_max = (1/N) 1.
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return m_.dim(); }
  const HermitianMatrix& hermitian() const { return m_; }
  const ComplexMatrix& matrix() const { return m_.matrix(); }
  operator const HermitianMatrix&() const { return m_; }

 private:
  HermitianMatrix m_;
};

/// Generalized Bloch vector V of an N-level system, V_i = Tr{rho T_i}.
class BlochVector {
 public:
  BlochVector(int dim, RealVector coords);

  int dim() const { return dim_; }
  const RealVector& coords() const { return coords_; }
  double length() const { return coords_.norm(); }

 private:
  int dim_;
  RealVector coords_;
};

/// Eigenvalues sorted descending with the count of |lambda| <= zero_tol.
struct Spectrum {
  RealVector values;
  int zero_count = 0;

  double max() const { return values(0); }
  double min() const { return values(values.size() - 1); }
};

class StateClass {
 public:
  enum class Kind { PositiveInterior, Boundary, Nonpositive };

  static StateClass positive_interior() { return {Kind::PositiveInterior, 0}; }
  static StateClass boundary(int p) { return {Kind::Boundary, p}; }
  static StateClass nonpositive() { return {Kind::Nonpositive, 0}; }

  Kind kind() const { return kind_; }
  /// Number of zero eigenvalues p; zero unless kind() == Boundary.
  int zero_count() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const StateClass&, const StateClass&) = default;

 private:
  StateClass(Kind kind, int p) : kind_(kind), p_(p) {}
  Kind kind_;
  int p_;
};

/// (1/N) 1 + sum_i v_i T_i. Unit trace, not necessarily positive.
HermitianMatrix from_bloch(const BasisSet& basis, const BlochVector& v);

/// V_i = Tr{m T_i}. Requires Tr m = 1 within tol::kUnitTrace.
BlochVector to_bloch(const BasisSet& basis, const HermitianMatrix& m);

Spectrum spectrum(const HermitianMatrix& m, double zero_tol = tol::kZero);

/// Tr{m^2} = sum |m_jk|^2.
double purity(const HermitianMatrix& m);

/// Requires unit trace. NONPOSITIVE iff lambda_min < -zero_tol; BOUNDARY(p)
/// iff p >= 1 eigenvalues lie in [-zero_tol, zero_tol].
StateClass classify(const HermitianMatrix& m, double zero_tol = tol::kZero);

}  // namespace blochgeom
