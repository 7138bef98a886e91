#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abca/blaschke.hpp"
#include "abca/domain.hpp"
#include "abca/polynomial.hpp"
#include "abca/power_series.hpp"
#include "abca/quadrature.hpp"

namespace abca {

// W and W' as evaluators in the coordinates of the domain.
struct WronskianHandle {
  Evaluator value;
  Evaluator derivative;
};

// Exact differentiation; no finite differences anywhere.
WronskianHandle handle_from_polynomial(const Polynomial& w);

struct BoundaryInvertibility {
  double min_modulus = 0;
  double max_modulus = 0;
  double theta_min = 0;
  double threshold = 0;
};

// Sampled estimate of the infimum of |W| on the boundary. Throws
// HypothesisViolation when it is at most rel_threshold * sup |W|.
BoundaryInvertibility check_boundary_invertibility(const Evaluator& w, const Domain& domain,
                                                   const QuadratureSpec& spec,
                                                   double rel_threshold = 1e-10);

struct FunctionalDiagnostics {
  double boundary_inf = 0;
  double boundary_sup = 0;
  double area_error = 0;
  double boundary_error = 0;
  double lambda_alpha_tail = 0;
  std::vector<std::string> notes;
};

struct FunctionalValues {
  double lambda_sq = 0;
  double mu = 1;
  double kappa = 0;
  std::optional<double> lambda_alpha_sq;
  FunctionalDiagnostics diagnostics;
};

// (1/pi) int |W'|^2 dA / (inf |W|)^2.
double lambda_functional(const WronskianHandle& w, const Domain& domain, const QuadratureSpec& spec);
// sup |W| / inf |W| on the boundary.
double mu_functional(const WronskianHandle& w, const Domain& domain, const QuadratureSpec& spec);
// (1/2pi) int |W'| ds / inf |W|.
double kappa_functional(const WronskianHandle& w, const Domain& domain, const QuadratureSpec& spec);

// sum k^alpha |W_k|^2 / (inf_T |W|)^2 for W given by its Taylor series on
// the unit disk. The infimum uses `exact` when given, else the series.
// Accepts 0 < alpha <= 1.
NormEstimate lambda_alpha_functional(const PowerSeries& w, double alpha, const QuadratureSpec& spec,
                                     const Evaluator& exact = {}, const GeometricTail* tail = nullptr);

// All of lambda^2, mu and kappa, sharing one boundary check.
FunctionalValues compute_functionals(const WronskianHandle& w, const Domain& domain, const QuadratureSpec& spec);

}  // namespace abca
