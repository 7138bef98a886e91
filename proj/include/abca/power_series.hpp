#pragma once

#include <span>
#include <vector>

#include "abca/domain.hpp"

namespace abca {

// Truncated Taylor series sum_{k<=M} c_k z^k. Terms past the truncation
// order M are dropped by every operation. Stored coefficients have trailing
// zeros trimmed, so products with low-degree factors cost O(degree * M).
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(int order);
  PowerSeries(std::vector<Complex> coeffs, int order);

  // Order defaults to the polynomial degree.
  static PowerSeries from_coefficients(std::vector<Complex> coeffs);

  int order() const { return order_; }
  Complex coeff(int k) const;
  std::span<const Complex> coeffs() const { return coeffs_; }
  int effective_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Complex evaluate(Complex z) const;
  PowerSeries derivative() const;
  PowerSeries truncated(int order) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(Complex c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, Complex c) { return a *= c; }
  friend PowerSeries operator*(Complex c, PowerSeries a) { return a *= c; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  // Throws std::domain_error("non-invertible at 0") when b(0) == 0.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

 private:
  void trim();
  std::vector<Complex> coeffs_;
  int order_ = 0;
};

enum class SeriesOp { kAdd, kMul, kDiv, kDerivative };

// Result order is the smaller operand order; kDerivative ignores b.
PowerSeries series_arith(const PowerSeries& a, const PowerSeries& b, SeriesOp op);

}  // namespace abca
