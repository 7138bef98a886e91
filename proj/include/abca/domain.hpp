#pragma once

#include <complex>
#include <functional>

namespace abca {

using Complex = std::complex<double>;
using Evaluator = std::function<Complex(Complex)>;

// Width of the band around the boundary circle, relative to the radius,
// inside which points count as neither interior nor exterior.
inline constexpr double kGuardBand = 1e-8;

// Omega: an open disk. Only disks ship; everything that needs the map onto
// the unit disk goes through ConformalMap.
class Domain {
 public:
  Domain() = default;
  // Throws std::invalid_argument unless radius > 0 and both are finite.
  Domain(Complex center, double radius);

  static Domain unit_disk() { return {}; }

  Complex center() const { return center_; }
  double radius() const { return radius_; }
  double diameter() const { return 2.0 * radius_; }

  // Point on the boundary circle at angle theta.
  Complex boundary_point(double theta) const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Complex center_{0.0, 0.0};
  double radius_ = 1.0;
};

// phi: Omega -> D together with its inverse and derivative, each extending
// continuously to the closure.
struct ConformalMap {
  Evaluator forward;
  Evaluator inverse;
  Evaluator derivative;
};

// phi(z) = (z - center) / radius: phi(center) = 0, phi' > 0.
ConformalMap affine_map(const Domain& domain);

enum class Location { kInside, kBoundaryBand, kOutside };

Location contains(const Domain& domain, Complex z);

// Coordinates under the affine map; cheaper than going through ConformalMap.
inline Complex to_unit(const Domain& d, Complex z) { return (z - d.center()) / d.radius(); }
inline Complex from_unit(const Domain& d, Complex w) { return d.center() + d.radius() * w; }

}  // namespace abca
