#include "abca/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace abca {

PowerSeries::PowerSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  if (coeffs_.size() > static_cast<std::size_t>(order) + 1)
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
  trim();
}

PowerSeries PowerSeries::from_coefficients(std::vector<Complex> coeffs) {
  const int order = std::max<int>(0, static_cast<int>(coeffs.size()) - 1);
  return PowerSeries(std::move(coeffs), order);
}

void PowerSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
}

Complex PowerSeries::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex PowerSeries::evaluate(Complex z) const {
  Complex acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PowerSeries PowerSeries::derivative() const {
  std::vector<Complex> d;
  if (coeffs_.size() > 1) {
    d.resize(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  }
  return PowerSeries(std::move(d), std::max(0, order_ - 1));
}

PowerSeries PowerSeries::truncated(int order) const {
  return PowerSeries(coeffs_, std::min(order, order_));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  order_ = std::min(order_, o.order_);
  const std::size_t len = static_cast<std::size_t>(order_) + 1;
  if (coeffs_.size() > len) coeffs_.resize(len);
  const std::size_t other = std::min(o.coeffs_.size(), len);
  if (coeffs_.size() < other) coeffs_.resize(other);
  for (std::size_t k = 0; k < other; ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  return *this += o * Complex(-1.0, 0.0);
}

PowerSeries& PowerSeries::operator*=(Complex c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order_, b.order_);
  if (a.is_zero() || b.is_zero()) return PowerSeries(order);
  const int len = std::min(order, a.effective_degree() + b.effective_degree()) + 1;
  std::vector<Complex> out(static_cast<std::size_t>(len));
  const int da = std::min(a.effective_degree(), order);
  for (int i = 0; i <= da; ++i) {
    const Complex ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == Complex(0.0, 0.0)) continue;
    const int jmax = std::min(b.effective_degree(), len - 1 - i);
    for (int j = 0; j <= jmax; ++j) out[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return PowerSeries(std::move(out), order);
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  if (b.coeff(0) == Complex(0.0, 0.0)) throw std::domain_error("non-invertible at 0");
  const int order = std::min(a.order_, b.order_);
  const Complex inv = 1.0 / b.coeff(0);
  const int db = b.effective_degree();
  std::vector<Complex> q(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    Complex acc = a.coeff(k);
    const int jmax = std::min(k, db);
    for (int j = 1; j <= jmax; ++j) acc -= b.coeffs_[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc * inv;
  }
  return PowerSeries(std::move(q), order);
}

PowerSeries series_arith(const PowerSeries& a, const PowerSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::kAdd:
      return a + b;
    case SeriesOp::kMul:
      return a * b;
    case SeriesOp::kDiv:
      return a / b;
    case SeriesOp::kDerivative:
      return a.derivative();
  }
  throw std::invalid_argument("unknown series operation");
}

}  // namespace abca
