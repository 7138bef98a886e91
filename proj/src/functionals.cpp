#include "abca/functionals.hpp"

#include <cmath>
#include <stdexcept>

#include "abca/errors.hpp"

namespace abca {
namespace {

Evaluator horner_evaluator(std::vector<Complex> c) {
  return [c = std::move(c)](Complex z) {
    Complex acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
}

}  // namespace

WronskianHandle handle_from_polynomial(const Polynomial& w) {
  return {horner_evaluator(w.to_complex()), horner_evaluator(w.derivative().to_complex())};
}

BoundaryInvertibility check_boundary_invertibility(const Evaluator& w, const Domain& domain,
                                                   const QuadratureSpec& spec, double rel_threshold) {
  const BoundaryExtrema ext = boundary_extrema(w, domain, spec);
  BoundaryInvertibility out{ext.inf, ext.sup, ext.theta_inf, rel_threshold * ext.sup};
  if (!(ext.inf > out.threshold))
    throw HypothesisViolation("W vanishes (numerically) on boundary: theorem hypotheses violated");
  return out;
}

double lambda_functional(const WronskianHandle& w, const Domain& domain, const QuadratureSpec& spec) {
  const auto inv = check_boundary_invertibility(w.value, domain, spec);
  const double area = area_integral_disk(w.derivative, domain, 0, spec).value;
  return area / (inv.min_modulus * inv.min_modulus);
}

double mu_functional(const WronskianHandle& w, const Domain& domain, const QuadratureSpec& spec) {
  const auto inv = check_boundary_invertibility(w.value, domain, spec);
  return inv.max_modulus / inv.min_modulus;
}

double kappa_functional(const WronskianHandle& w, const Domain& domain, const QuadratureSpec& spec) {
  const auto inv = check_boundary_invertibility(w.value, domain, spec);
  return boundary_integral(w.derivative, domain, BoundaryKind::kL1, spec).value / inv.min_modulus;
}

NormEstimate lambda_alpha_functional(const PowerSeries& w, double alpha, const QuadratureSpec& spec,
                                     const Evaluator& exact, const GeometricTail* tail) {
  if (!(alpha > 0) || alpha > 1) throw std::invalid_argument("alpha must lie in (0, 1]");
  const Evaluator on_circle = exact ? exact : Evaluator([&w](Complex z) { return w.evaluate(z); });
  const auto inv = check_boundary_invertibility(on_circle, Domain(), spec);
  NormEstimate n = d_alpha_norm_sq(w, alpha, tail);
  const double s = inv.min_modulus * inv.min_modulus;
  return {n.value / s, n.tail_bound / s};
}

FunctionalValues compute_functionals(const WronskianHandle& w, const Domain& domain, const QuadratureSpec& spec) {
  const auto inv = check_boundary_invertibility(w.value, domain, spec);
  const auto area = area_integral_disk(w.derivative, domain, 0, spec);
  const auto l1 = boundary_integral(w.derivative, domain, BoundaryKind::kL1, spec);
  FunctionalValues v;
  const double m = inv.min_modulus;
  v.lambda_sq = area.value / (m * m);
  v.mu = inv.max_modulus / m;
  v.kappa = l1.value / m;
  v.diagnostics.boundary_inf = m;
  v.diagnostics.boundary_sup = inv.max_modulus;
  v.diagnostics.area_error = area.error_estimate;
  v.diagnostics.boundary_error = l1.error_estimate;
  return v;
}

}  // namespace abca
