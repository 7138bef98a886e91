#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abca/analytic_function.hpp"
#include "abca/blaschke.hpp"
#include "abca/functionals.hpp"
#include "abca/polynomial.hpp"
#include "abca/quadrature.hpp"

namespace abca {

// f_0..f_n together with f_{n+1} = f_0 + ... + f_n and every derived object.
struct AnalyticSystem {
  Domain domain;
  int n = 0;
  std::vector<AnalyticFunction> functions;  // f_0 .. f_{n+1}
  std::vector<BlaschkeProduct> blaschke;    // B_0 .. B_{n+1}
  BlaschkeProduct bigB;                     // LCM of the B_j
  BlaschkeProduct calB;                     // radical of their product
  bool polynomial_path = true;
  std::optional<Polynomial> w_exact;  // polynomial path only
  WronskianHandle w;
  BoundaryInvertibility w_boundary;
  std::vector<std::string> notes;
};

// Zeros of f inside the domain, with multiplicities. Polynomials go through
// their squarefree factors; other kinds root the numerator of their rational
// form and are validated against the winding number of f on the boundary.
// Throws HypothesisViolation for a zero in the boundary guard band or an f
// vanishing identically.
std::vector<BlaschkeZero> zeros_in_domain(const AnalyticFunction& f, const Domain& domain,
                                          const QuadratureSpec& spec, const std::string& name);

// f_0..f_n in; f_{n+1} is always recomputed. Non-polynomial functions
// require the unit disk. Throws std::invalid_argument for malformed input
// and HypothesisViolation when a hypothesis of the theorems fails.
AnalyticSystem build_system(std::vector<AnalyticFunction> fs, const Domain& domain,
                            const QuadratureSpec& spec);

// Taylor coefficients of W about 0 on the unit disk, to the given order.
PowerSeries wronskian_taylor(const AnalyticSystem& sys, int order);

struct Divisibility {
  bool ok = false;
  bool exact = false;         // decided in exact arithmetic
  double max_remainder = 0;   // series path: normalized division remainder
  double modulus_gap = 0;     // max ||F| - |W|| / max |W| on the boundary samples
  int boundary_samples = 0;
  Evaluator F;                // W * calB^n / bigB
};

// Checks that W * calB^n is divisible by bigB and returns the quotient.
// Throws Inconsistency when it is not, which the theorems rule out.
Divisibility check_divisibility(const AnalyticSystem& sys, const QuadratureSpec& spec,
                                double tol = 1e-8, int series_order = 512);

}  // namespace abca
