#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "abca/blaschke.hpp"
#include "abca/domain.hpp"
#include "abca/polynomial.hpp"
#include "abca/power_series.hpp"

namespace abca {

// f, f', ..., f^(k) at z for the polynomial with coefficients c.
std::vector<Complex> polynomial_jet(std::span<const Complex> c, Complex z, int k);

// Coefficients of p(center + scale * w) in w.
std::vector<Complex> polynomial_recenter(std::span<const Complex> c, Complex center, Complex scale);

std::vector<Complex> polynomial_multiply(std::span<const Complex> a, std::span<const Complex> b);

// A function entering a system. Polynomials are exact and live in the
// coordinates of the domain; the other kinds live on the unit disk.
class AnalyticFunction {
 public:
  enum class Kind { kPolynomial, kSeries, kBlaschke, kSum };

  AnalyticFunction() : AnalyticFunction(Polynomial()) {}
  explicit AnalyticFunction(Polynomial p);

  // A truncated Taylor series; `exact` (if given) is the function the
  // series approximates and is used wherever values are compared.
  static AnalyticFunction from_series(PowerSeries s, Evaluator exact = {});
  // scale * B, with B on the unit disk.
  static AnalyticFunction from_blaschke(BlaschkeProduct b, Complex scale = 1.0);
  // Simplest kind that represents the sum exactly.
  static AnalyticFunction sum(std::span<const AnalyticFunction> terms);

  Kind kind() const;
  bool is_polynomial() const { return kind() == Kind::kPolynomial; }
  // Throws std::logic_error for the other kinds.
  const Polynomial& polynomial() const;
  const BlaschkeProduct* blaschke() const;
  Complex blaschke_scale() const;

  bool identically_zero() const;

  Complex operator()(Complex z) const;
  std::vector<Complex> jet(Complex z, int k) const;

  // Taylor coefficients about 0 to the given order; series inputs keep
  // their own order when it is smaller.
  PowerSeries taylor(int order) const;

  // f = numerator / denominator as polynomials; the denominator has no
  // zeros in the closed unit disk.
  std::pair<std::vector<Complex>, std::vector<Complex>> rational_form() const;

  std::string describe() const;

 private:
  struct PolyData {
    Polynomial exact;
    std::vector<Complex> c;
  };
  struct SeriesData {
    PowerSeries s;
    Evaluator exact;
  };
  struct BlaschkeData {
    BlaschkeProduct b;
    Complex scale;
  };
  struct SumData {
    std::shared_ptr<const std::vector<AnalyticFunction>> terms;
  };
  std::variant<PolyData, SeriesData, BlaschkeData, SumData> data_;
};

}  // namespace abca
