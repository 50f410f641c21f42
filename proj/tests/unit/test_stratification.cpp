#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "blochgeom/direction.hpp"
#include "blochgeom/errors.hpp"
#include "blochgeom/sampling.hpp"
#include "blochgeom/stratification.hpp"
#include "test_util.hpp"

using namespace blochgeom;
using blochgeom::testing::diag;
using blochgeom::testing::max_abs_diff;

TEST(DistanceToMax, Examples) {
  EXPECT_EQ(distance_to_max(DensityMatrix::maximally_mixed(4)), 0.0);
  EXPECT_NEAR(distance_to_max(DensityMatrix(HermitianMatrix(diag({1, 0})))), 0.7071067811865476, 1e-15);
  EXPECT_NEAR(distance_to_max(DensityMatrix(HermitianMatrix(diag({0.5, 0.5, 0})))), 0.408248290463863,
              1e-15);
}

TEST(DistanceToMax, EqualsBlochLength) {
  for (int n = 2; n <= 5; ++n) {
    const BasisSet b = build_basis(n);
    for (std::uint64_t i = 0; i < 50; ++i) {
      const DensityMatrix rho = sample_state({11, n, 1 + static_cast<int>(i % n), 0}, i);
      EXPECT_NEAR(distance_to_max(rho), to_bloch(b, rho).length(), 1e-10);
      EXPECT_NEAR(distance_to_max(rho), std::sqrt(purity(rho) - 1.0 / n), 1e-10);
    }
  }
}

TEST(StratumRadius, Examples) {
  EXPECT_NEAR(stratum_radius(3, 1), 0.408248290463863, 1e-15);
  EXPECT_NEAR(stratum_radius(3, 2), 0.816496580927726, 1e-15);
  EXPECT_NEAR(stratum_radius(2, 1), 0.7071067811865476, 1e-15);
  EXPECT_EQ(small_sphere_radius(2), large_sphere_radius(2));
}

TEST(StratumRadius, EndpointsAndMonotone) {
  for (int n = 2; n <= 10; ++n) {
    EXPECT_DOUBLE_EQ(stratum_radius(n, 1), std::sqrt(1.0 / (n * (n - 1.0))));
    EXPECT_DOUBLE_EQ(stratum_radius(n, n - 1), std::sqrt((n - 1.0) / n));
    for (int p = 1; p + 1 <= n - 1; ++p) EXPECT_GT(stratum_radius(n, p + 1), stratum_radius(n, p));
  }
}

TEST(StratumRadius, RangeErrors) {
  EXPECT_THROW(stratum_radius(3, 0), DomainError);
  EXPECT_THROW(stratum_radius(3, 3), DomainError);
  EXPECT_THROW(stratum_radius(1, 1), DomainError);
}

TEST(BoundaryState, Examples) {
  EXPECT_EQ(max_abs_diff(boundary_state(3, 2).matrix(), diag({0.5, 0.5, 0})), 0.0);
  EXPECT_EQ(max_abs_diff(boundary_state(4, 4).matrix(), DensityMatrix::maximally_mixed(4).matrix()), 0.0);
  EXPECT_EQ(max_abs_diff(boundary_state(5, 1).matrix(), diag({1, 0, 0, 0, 0})), 0.0);
  EXPECT_THROW(boundary_state(3, 0), DomainError);
  EXPECT_THROW(boundary_state(3, 4), DomainError);
}

TEST(Harriman, Examples) {
  const std::vector<double> uniform{0.5, 0.5};
  LemmaResult r = harriman_check(uniform);
  EXPECT_DOUBLE_EQ(r.sum_of_squares, 0.5);
  EXPECT_DOUBLE_EQ(r.bound, 0.5);
  EXPECT_TRUE(r.equality);

  const std::vector<double> pure{1, 0};
  r = harriman_check(pure);
  EXPECT_DOUBLE_EQ(r.sum_of_squares, 1.0);
  EXPECT_FALSE(r.equality);

  const std::vector<double> negative{2, -1};
  r = harriman_check(negative);
  EXPECT_DOUBLE_EQ(r.sum_of_squares, 5.0);
  EXPECT_DOUBLE_EQ(r.bound, 0.5);
  EXPECT_DOUBLE_EQ(r.slack, 4.5);
  EXPECT_FALSE(r.equality);
}

TEST(Harriman, RejectsBadSum) {
  const std::vector<double> bad{0.5, 0.4};
  EXPECT_THROW(harriman_check(bad), DomainError);
  EXPECT_THROW(harriman_check(std::vector<double>{}), DomainError);
}

TEST(Harriman, SlackIsSumOfSquaredDeviations) {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::vector<double> a = sample_unit_sum_tuple(5, n, i);
      double s = 0.0;
      for (double x : a) s += (x - 1.0 / n) * (x - 1.0 / n);
      const LemmaResult r = harriman_check(a);
      EXPECT_NEAR(r.slack, s, 1e-12);
      EXPECT_GE(r.sum_of_squares, r.bound - 1e-12);
    }
  }
}

TEST(StratumReport, Examples) {
  StratumReport r = stratum_report(boundary_state(3, 2));
  EXPECT_EQ(r.p, 1);
  EXPECT_NEAR(r.distance, std::sqrt(1.0 / 6), 1e-15);
  EXPECT_TRUE(r.on_sphere);
  EXPECT_TRUE(r.satisfied);

  r = stratum_report(DensityMatrix(HermitianMatrix(diag({0.9, 0.1, 0}))));
  EXPECT_EQ(r.p, 1);
  EXPECT_NEAR(r.distance, 0.6976149845485451, 1e-14);
  EXPECT_FALSE(r.on_sphere);
  EXPECT_TRUE(r.satisfied);

  r = stratum_report(DensityMatrix::maximally_mixed(3));
  EXPECT_EQ(r.p, 0);
  EXPECT_EQ(r.radius_p, 0.0);
  EXPECT_TRUE(r.satisfied);
}

TEST(StratumReport, EveryBoundaryStateOnItsSphere) {
  for (int n = 2; n <= 8; ++n) {
    for (int q = 1; q <= n - 1; ++q) {
      const StratumReport r = stratum_report(boundary_state(n, q));
      EXPECT_EQ(r.p, n - q);
      EXPECT_TRUE(r.on_sphere);
      EXPECT_LE(std::abs(r.distance - r.radius_p), 1e-12);
    }
  }
}

TEST(StratumReport, SampledStatesSatisfyAndOnSphereImpliesEqualEigenvalues) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (std::uint64_t i = 0; i < 200; ++i) {
        const DensityMatrix rho = sample_state({21, n, k, 0}, i);
        const StratumReport r = stratum_report(rho);
        EXPECT_TRUE(r.satisfied);
        EXPECT_EQ(r.p, n - k);
        if (r.on_sphere) {
          const Spectrum s = spectrum(rho);
          for (int j = 0; j < n - r.p; ++j) EXPECT_NEAR(s.values(j), 1.0 / (n - r.p), 1e-8);
        }
      }
    }
  }
}

TEST(StratumReport, PureStatesOnLargeSphere) {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      const StratumReport r = stratum_report(sample_state({31, n, 1, 0}, i));
      EXPECT_NEAR(r.distance, std::sqrt((n - 1.0) / n), 1e-10);
    }
  }
}

TEST(SmallBall, InteriorIsPositiveAndWitnessOutsideIsNot) {
  for (int n = 3; n <= 5; ++n) {
    const BasisSet b = build_basis(n);
    const double rs = small_sphere_radius(n);
    for (std::uint64_t i = 0; i < 500; ++i) {
      const BlochVector v = sample_bloch_in_ball(41, n * n - 1, rs - 1e-9, i);
      EXPECT_GE(spectrum(from_bloch(b, v)).min(), -1e-10);
    }
    const RealVector dir = direction_of(b, directional_matrix_of_boundary(n, n - 1));
    const HermitianMatrix witness = state_along(b, dir, rs + 1e-3);
    EXPECT_LT(spectrum(witness).min(), 0.0);
    EXPECT_EQ(classify(witness).kind(), StateClass::Kind::Nonpositive);
  }
}
