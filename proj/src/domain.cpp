#include "abca/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace abca {

Domain::Domain(Complex center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(center.real()) ||
      !std::isfinite(center.imag()))
    throw std::invalid_argument("a domain needs a finite center and a positive finite radius");
}

Complex Domain::boundary_point(double theta) const {
  return center_ + radius_ * Complex(std::cos(theta), std::sin(theta));
}

ConformalMap affine_map(const Domain& domain) {
  const Complex c = domain.center();
  const double r = domain.radius();
  return {
      [c, r](Complex z) { return (z - c) / r; },
      [c, r](Complex w) { return c + r * w; },
      [r](Complex) { return Complex(1.0 / r, 0.0); },
  };
}

Location contains(const Domain& domain, Complex z) {
  const double m = std::abs(to_unit(domain, z));
  if (m < 1.0 - kGuardBand) return Location::kInside;
  if (m <= 1.0 + kGuardBand) return Location::kBoundaryBand;
  return Location::kOutside;
}

}  // namespace abca
