#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "abca/blaschke.hpp"
#include "abca/functionals.hpp"
#include "abca/polynomial.hpp"
#include "abca/quadrature.hpp"
#include "abca/system.hpp"

namespace abca {

enum class Status { kHolds, kEquality, kFails, kHypothesisViolated };

std::string to_string(Status s);

// Relative tolerance for reporting equality: |slack| <= tol * (1 + |rhs|).
inline constexpr double kEqualityTol = 1e-6;

struct VerificationReport {
  std::string theorem;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;  // rhs - lhs
  std::optional<FunctionalValues> functionals;
  std::optional<int> n_bigB;
  std::optional<int> n_calB;
  Status status = Status::kHolds;
  std::vector<std::string> diagnostics;
  // Operation-specific values, in a fixed order.
  std::vector<std::pair<std::string, double>> values;

  std::optional<double> value(const std::string& key) const;
};

// Status of lhs <= rhs.
Status classify(double lhs, double rhs, double tol = kEqualityTol);

VerificationReport hypothesis_report(std::string theorem, std::string message);

// N(bigB) <= lambda^2 + n mu^2 N(calB).
VerificationReport verify_theorem1(const AnalyticSystem& sys, const QuadratureSpec& spec);
// N(bigB) <= kappa + n mu N(calB).
VerificationReport verify_theorem2(const AnalyticSystem& sys, const QuadratureSpec& spec);

enum class Prop3Variant { kA, kB };
// The two estimates on the unit disk for functions only smooth up to the
// boundary; finiteness of the zero sets comes from the winding numbers.
VerificationReport verify_prop3(const AnalyticSystem& sys, const QuadratureSpec& spec, Prop3Variant v);

// Reports implied_c = (lambda_alpha^2 + n mu^2 |calB|^2) / |bigB|^2 in D_alpha
// at truncation order M and 2M. order = 0 picks M from the tail bounds.
VerificationReport verify_theorem4(const AnalyticSystem& sys, double alpha, const QuadratureSpec& spec,
                                   int order = 0);

// |f theta|_D^2 against |f|_D^2 + (1/2pi) int |f|^2 |theta'| ds. Throws
// Inconsistency when the sides differ by more than 10 times the equality
// tolerance.
VerificationReport verify_carleson_formula(const Polynomial& f, const BlaschkeProduct& theta,
                                           const QuadratureSpec& spec);

// (1/2pi) int |f| |theta'| ds <= |(f theta)'|_{L^1}. Throws Inconsistency
// when violated by more than the slack floor.
inline constexpr double kSlackFloor = 1e-8;
VerificationReport verify_vs_inequality(const Polynomial& f, const BlaschkeProduct& theta,
                                        const QuadratureSpec& spec);

// |theta|^2_{D_alpha} against (1/pi) int (1 - |theta|^2) / (1 - |z|^2)^(1+alpha) dA
// on the unit disk, plus R_alpha(f, theta) = |f theta|^2 - |f|^2 over sample f.
VerificationReport verify_dalpha_comparability(const BlaschkeProduct& theta, double alpha,
                                               const QuadratureSpec& spec);

// |f theta|^2_{D_alpha} - |f|^2_{D_alpha} by Taylor coefficients.
NormEstimate r_alpha(const Polynomial& f, const BlaschkeProduct& theta, double alpha, int order = 0);

struct LimitRow {
  double radius = 0;
  double kappa = 0;
  double mu = 0;
  bool skipped = false;
};

struct LimitTable {
  int degree = 0;
  std::vector<LimitRow> rows;
  bool kappa_ok = false;     // |kappa - m| <= 5 m / R_max
  bool mu_ok = false;        // mu <= 1 + 5 (coefficient scale) / R_max
  bool monotone = false;     // |kappa - m| does not grow along the schedule
  std::vector<std::string> warnings;
};

// kappa and mu of W on the disks of the given radii about 0.
LimitTable limit_demo(const Polynomial& w, const std::vector<double>& radii, const QuadratureSpec& spec);

struct ExampleParams {
  int n = 2;
  int m = 5;
  mpq_class eps{1, 10};
  Domain domain;
};

ExampleParams default_example_params(int which);

// The systems of the two sharpness examples.
AnalyticSystem example_system(int which, const ExampleParams& p, const QuadratureSpec& spec);

struct ExampleRun {
  AnalyticSystem system;
  VerificationReport theorem1;
  VerificationReport theorem2;
};

// Builds the example, runs both theorems and requires equality in both.
// Throws HypothesisViolation quoting the violated parameter constraint.
ExampleRun run_example(int which, const ExampleParams& p, const QuadratureSpec& spec);

}  // namespace abca
