#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include <complex>

namespace abca {

// A theorem or lemma hypothesis does not hold for the given input
// (boundary zeros, dependent functions, parameters outside their range).
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two computations that must agree did not. Signals a bug in this library,
// never a defect of the mathematics being checked.
class Inconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An iterative numerical procedure ran out of refinements.
class ConvergenceFailure : public std::runtime_error {
 public:
  ConvergenceFailure(const std::string& what, double last, double previous)
      : std::runtime_error(what), last_(last), previous_(previous) {}

  double last_estimate() const { return last_; }
  double previous_estimate() const { return previous_; }

 private:
  double last_;
  double previous_;
};

// Aberth iteration did not converge; carries the best iterate.
class RootFindingFailure : public std::runtime_error {
 public:
  RootFindingFailure(const std::string& what,
                     std::vector<std::complex<double>> best,
                     std::vector<double> residuals)
      : std::runtime_error(what),
        best_(std::move(best)),
        residuals_(std::move(residuals)) {}

  const std::vector<std::complex<double>>& best_iterate() const { return best_; }
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<std::complex<double>> best_;
  std::vector<double> residuals_;
};

}  // namespace abca
