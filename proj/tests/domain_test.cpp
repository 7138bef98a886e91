#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "abca/domain.hpp"
#include "abca/quadrature.hpp"

namespace abca {
namespace {

using C = Complex;

TEST(AffineMap, UnitDiskIsIdentity) {
  const auto phi = affine_map(Domain::unit_disk());
  for (C z : {C(0.3, -0.1), C(0, 0), C(-0.9, 0.2)}) {
    EXPECT_EQ(phi.forward(z), z);
    EXPECT_EQ(phi.inverse(z), z);
    EXPECT_EQ(phi.derivative(z), C(1));
  }
}

TEST(AffineMap, ScaledDisk) {
  const auto phi = affine_map(Domain({0, 0}, 4));
  EXPECT_EQ(phi.forward(C(2, 1)), C(0.5, 0.25));
  EXPECT_EQ(phi.derivative(C(2, 1)), C(0.25));
}

TEST(AffineMap, ShiftedDiskBoundaryToBoundary) {
  const auto phi = affine_map(Domain({1, 0}, 2));
  EXPECT_EQ(phi.forward(C(3)), C(1));
  EXPECT_EQ(phi.forward(C(1)), C(0));
}

TEST(AffineMap, BoundaryMapsToUnitCircleAndInverts) {
  const Domain d({-0.7, 2.5}, 3.3);
  const auto phi = affine_map(d);
  for (int k = 0; k < 512; ++k) {
    const C z = d.boundary_point(2 * std::numbers::pi * k / 512);
    EXPECT_NEAR(std::abs(phi.forward(z)), 1, 1e-12);
    EXPECT_NEAR(std::abs(phi.inverse(phi.forward(z)) - z), 0, 1e-10);
  }
}

TEST(Contains, Classification) {
  const Domain d;
  EXPECT_EQ(contains(d, 0), Location::kInside);
  EXPECT_EQ(contains(d, 1), Location::kBoundaryBand);
  EXPECT_EQ(contains(d, 2), Location::kOutside);
  EXPECT_EQ(contains(d, C(0, 1 - 1e-9)), Location::kBoundaryBand);
  EXPECT_EQ(contains(d, C(0, 1 - 1e-7)), Location::kInside);
  EXPECT_EQ(contains(Domain({5, 5}, 10), C(15, 5 + 1e-4)), Location::kBoundaryBand);
}

TEST(Domain, RejectsBadRadius) {
  EXPECT_THROW(Domain({0, 0}, 0), std::invalid_argument);
  EXPECT_THROW(Domain({0, 0}, -1), std::invalid_argument);
  EXPECT_THROW(Domain({0, 0}, std::nan("")), std::invalid_argument);
}

TEST(Domain, DirichletIntegralIsConformallyInvariant) {
  const Domain d({0.5, -1}, 2.5);
  const auto phi = affine_map(d);
  // f(z) = z^3 - 2z + i, f'(z) = 3z^2 - 2.
  const Evaluator fp = [](C z) { return 3.0 * z * z - 2.0; };
  const QuadratureSpec spec;
  const double on_omega = area_integral_disk(fp, d, 0, spec).value;
  const Evaluator pulled = [&](C w) { return fp(phi.inverse(w)) / phi.derivative(phi.inverse(w)); };
  const double on_disk = area_integral_disk(pulled, Domain(), 0, spec).value;
  EXPECT_NEAR(on_omega, on_disk, 1e-10 * on_disk);
}

}  // namespace
}  // namespace abca
