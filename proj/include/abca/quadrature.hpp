#pragma once

#include <functional>
#include <vector>

#include "abca/domain.hpp"

namespace abca {

using RealEvaluator = std::function<double(Complex)>;

struct QuadratureSpec {
  int boundary_nodes = 256;  // power of two, >= 64
  int radial_nodes = 32;
  int refine_limit = 8;      // node doublings before giving up
  double tol = 1e-12;        // relative change between doublings

  // Throws std::invalid_argument on a malformed spec.
  void validate() const;
};

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;  // |last - previous|
  int nodes = 0;
};

// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on [-1, 1], a, b > -1,
// by Golub-Welsch. Nodes ascending.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_jacobi(int n, double a, double b);

// (1/2pi) * integral of h over the boundary circle against arc length ds,
// so h = 1 on a circle of radius R gives R. Periodic trapezoid with node
// doubling. Throws ConvergenceFailure with the last two estimates.
QuadratureResult boundary_mean(const RealEvaluator& h, const Domain& domain,
                               const QuadratureSpec& spec);

enum class BoundaryKind { kL1, kSup };

// L1: (1/2pi) * integral of |g| ds. Sup: max |g| on the circle.
QuadratureResult boundary_integral(const Evaluator& g, const Domain& domain, BoundaryKind kind,
                                   const QuadratureSpec& spec);

struct BoundaryExtrema {
  double sup = 0;
  double inf = 0;
  double theta_sup = 0;
  double theta_inf = 0;
};

// Max and min of |g| on the circle: at least 4096 samples, then
// golden-section refinement around the three best nodes of each kind.
// A sampled estimate; the true sup may exceed it slightly.
BoundaryExtrema boundary_extrema(const Evaluator& g, const Domain& domain,
                                 const QuadratureSpec& spec);

// (1/pi) * integral over the disk of h(z) (1 - |phi(z)|)^s dA, s > -1.
// Gauss-Jacobi in the radius times adaptive trapezoid on each ring.
QuadratureResult area_integral_weighted(const RealEvaluator& h, const Domain& domain, double s,
                                        const QuadratureSpec& spec);

// (1/pi) * integral over the disk of |g|^2 (1 - |phi(z)|)^weight_exponent dA.
QuadratureResult area_integral_disk(const Evaluator& g, const Domain& domain,
                                    double weight_exponent, const QuadratureSpec& spec);

// Winding number of f along the boundary circle, counterclockwise.
// Throws HypothesisViolation("zero too close to boundary") when a sampled
// modulus drops below 1e-8 of the largest one.
int winding_count(const Evaluator& f, const Domain& domain, const QuadratureSpec& spec);

}  // namespace abca
