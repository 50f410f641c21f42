#include <gtest/gtest.h>

#include <cmath>

#include "blochgeom/errors.hpp"
#include "blochgeom/sampling.hpp"
#include "blochgeom/state.hpp"
#include "test_util.hpp"

using namespace blochgeom;
using blochgeom::testing::diag;
using blochgeom::testing::max_abs_diff;
using blochgeom::testing::random_unitary;

TEST(FromBloch, ZeroVectorIsMaximallyMixed) {
  for (int n = 2; n <= 6; ++n) {
    const BasisSet b = build_basis(n);
    const HermitianMatrix m = from_bloch(b, BlochVector(n, RealVector::Zero(n * n - 1)));
    EXPECT_LT(max_abs_diff(m.matrix(), ComplexMatrix::Identity(n, n) / static_cast<double>(n)), 1e-16);
  }
}

TEST(FromBloch, QubitPureState) {
  const BasisSet b = build_basis(2);
  RealVector v(3);
  v << 0, 0, 1 / std::sqrt(2.0);
  EXPECT_LT(max_abs_diff(from_bloch(b, BlochVector(2, v)).matrix(), diag({1, 0})), 1e-15);
}

TEST(FromBloch, LongVectorAlongSmallSphereDirectionIsNonpositive) {
  // T_n = diag(1/sqrt6, 1/sqrt6, -sqrt(2/3)) at |v| = 0.9.
  const BasisSet b = build_basis(3);
  const ComplexMatrix t = diag({1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -std::sqrt(2.0 / 3.0)});
  const RealVector v = 0.9 * b.coordinates(t);
  const HermitianMatrix m = from_bloch(b, BlochVector(3, v));
  const Spectrum s = spectrum(m);
  EXPECT_NEAR(s.min(), -0.40151358950162014, 1e-14);  // 1/3 - 0.9 sqrt(2/3)
  EXPECT_EQ(classify(m), StateClass::nonpositive());
}

TEST(FromBloch, DimensionMismatch) {
  EXPECT_THROW(from_bloch(build_basis(3), BlochVector(2, RealVector::Zero(3))), DomainError);
  EXPECT_THROW(BlochVector(3, RealVector::Zero(4)), DomainError);
}

TEST(ToBloch, Examples) {
  const BasisSet b2 = build_basis(2);
  const RealVector v = to_bloch(b2, HermitianMatrix(diag({1, 0}))).coords();
  EXPECT_NEAR(v(0), 0.0, 1e-16);
  EXPECT_NEAR(v(1), 0.0, 1e-16);
  EXPECT_NEAR(v(2), 0.7071067811865475, 1e-15);

  const BasisSet b4 = build_basis(4);
  EXPECT_LT(to_bloch(b4, DensityMatrix::maximally_mixed(4)).length(), 1e-16);
}

TEST(ToBloch, RejectsNonUnitTraceAndMismatch) {
  EXPECT_THROW(to_bloch(build_basis(2), HermitianMatrix(diag({1, 1}))), DomainError);
  EXPECT_THROW(to_bloch(build_basis(3), HermitianMatrix(diag({1, 0}))), DomainError);
}

TEST(ToBloch, RoundTripAndLengthIdentity) {
  for (int n : {2, 3, 4, 6}) {
    const BasisSet b = build_basis(n);
    for (std::uint64_t i = 0; i < 100; ++i) {
      Substream rng{99, static_cast<std::uint64_t>(n), i};
      RealVector v(n * n - 1);
      for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = rng.normal();
      const HermitianMatrix m = from_bloch(b, BlochVector(n, v));
      const BlochVector back = to_bloch(b, m);
      EXPECT_LE((back.coords() - v).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_NEAR(back.length() * back.length(), purity(m) - 1.0 / n, 1e-10);
    }
  }
}

TEST(Spectrum, DiagonalExamples) {
  const Spectrum s = spectrum(HermitianMatrix(diag({0.5, 0, 0.5})), 1e-9);
  EXPECT_NEAR(s.values(0), 0.5, 1e-15);
  EXPECT_NEAR(s.values(1), 0.5, 1e-15);
  EXPECT_NEAR(s.values(2), 0.0, 1e-15);
  EXPECT_EQ(s.zero_count, 1);

  const Spectrum mixed = spectrum(DensityMatrix::maximally_mixed(4), 1e-9);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(mixed.values(k), 0.25, 1e-15);
  EXPECT_EQ(mixed.zero_count, 0);
}

TEST(Spectrum, UnitaryInvariance) {
  const ComplexMatrix d = diag({0.7, 0.3, 0, 0});
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const ComplexMatrix u = random_unitary(4, seed);
    ASSERT_LT(max_abs_diff(u * u.adjoint(), ComplexMatrix::Identity(4, 4)), 1e-12);
    const Spectrum s = spectrum(HermitianMatrix(u * d * u.adjoint()), 1e-9);
    EXPECT_NEAR(s.values(0), 0.7, 1e-10);
    EXPECT_NEAR(s.values(1), 0.3, 1e-10);
    EXPECT_NEAR(s.values(2), 0.0, 1e-10);
    EXPECT_NEAR(s.values(3), 0.0, 1e-10);
    EXPECT_EQ(s.zero_count, 2);
  }
}

TEST(Spectrum, SortedDescending) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Spectrum s = spectrum(sample_state({7, 5, 3, 0}, i));
    for (Eigen::Index k = 1; k < s.values.size(); ++k) EXPECT_GE(s.values(k - 1), s.values(k));
  }
}

TEST(Spectrum, RejectsNonPositiveTolerance) {
  EXPECT_THROW(spectrum(HermitianMatrix(diag({1, 0})), 0.0), DomainError);
}

TEST(Purity, Examples) {
  EXPECT_NEAR(purity(DensityMatrix::maximally_mixed(5)), 0.2, 1e-16);
  EXPECT_NEAR(purity(HermitianMatrix(diag({1, 0, 0}))), 1.0, 0.0);
  EXPECT_NEAR(purity(HermitianMatrix(diag({0.5, 0.5, 0}))), 0.5, 0.0);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(DensityMatrix::maximally_mixed(3)), StateClass::positive_interior());
  EXPECT_EQ(classify(HermitianMatrix(diag({0.5, 0.5, 0}))), StateClass::boundary(1));
  EXPECT_EQ(classify(HermitianMatrix(diag({2.0 / 3, 2.0 / 3, -1.0 / 3}))), StateClass::nonpositive());
  EXPECT_EQ(StateClass::boundary(2).to_string(), "BOUNDARY(2)");
}

TEST(Classify, NonUnitTraceIsPrecondition) {
  EXPECT_THROW(classify(HermitianMatrix(diag({0.5, 0.4, 0}))), DomainError);
}

TEST(HermitianMatrix, RejectsNonHermitianAndNonSquare) {
  ComplexMatrix m = diag({0.5, 0.5});
  m(0, 1) = Complex(0.1, 0.0);
  EXPECT_THROW(HermitianMatrix{m}, DomainError);
  EXPECT_THROW(HermitianMatrix{ComplexMatrix::Zero(2, 3)}, DomainError);
  m(1, 0) = Complex(0.1, 1e-13);
  EXPECT_NO_THROW(HermitianMatrix{m});
}

TEST(DensityMatrix, Validates) {
  EXPECT_THROW(DensityMatrix(HermitianMatrix(diag({0.6, 0.6}))), DomainError);
  EXPECT_THROW(DensityMatrix(HermitianMatrix(diag({1.1, -0.1}))), DomainError);
  EXPECT_NO_THROW(DensityMatrix(HermitianMatrix(diag({1.0 + 5e-11, -5e-11}))));
}

TEST(DensityMatrix, LargeSphereBound) {
  for (int n = 2; n <= 6; ++n) {
    const BasisSet b = build_basis(n);
    for (int k = 1; k <= n; ++k) {
      for (std::uint64_t i = 0; i < 50; ++i) {
        const BlochVector v = to_bloch(b, sample_state({3, n, k, 0}, i));
        EXPECT_LE(v.length(), std::sqrt((n - 1.0) / n) + 1e-10);
      }
    }
  }
}
