#pragma once

#include <span>
#include <vector>

#include "abca/domain.hpp"
#include "abca/power_series.hpp"
#include "abca/quadrature.hpp"

namespace abca {

struct BlaschkeZero {
  Complex location;
  int multiplicity = 1;
};

// kCanonical uses the factor (|a|/a) (a - w)/(1 - conj(a) w), and w at the
// origin, so that B(0) >= 0 on the unit disk. kMobius uses (w - a)/(1 - conj(a) w).
// They differ by a unimodular constant.
enum class Normalization { kCanonical, kMobius };

// Finite Blaschke product on a disk, B = prod b_{phi(a_k)}(phi(z))^{m_k}.
// Zeros are kept in unit-disk coordinates; zeros closer than 1e-6 there are
// merged. The empty product is the constant 1.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  explicit BlaschkeProduct(Domain domain, Normalization norm = Normalization::kCanonical)
      : domain_(domain), norm_(norm) {}

  const Domain& domain() const { return domain_; }
  Normalization normalization() const { return norm_; }

  // Zeros in the coordinates of the domain, and in unit-disk coordinates.
  std::vector<BlaschkeZero> zeros() const;
  const std::vector<BlaschkeZero>& unit_zeros() const { return zeros_; }

  int count() const;
  int distinct() const { return static_cast<int>(zeros_.size()); }
  bool empty() const { return zeros_.empty(); }
  // max |phi(a_k)|; 0 for the empty product.
  double rho() const;

  // Values in unit-disk coordinates w = phi(z); no domain check.
  Complex eval_unit(Complex w) const;
  Complex derivative_unit(Complex w) const;  // d/dw

  // B(w) = numerator(w) / denominator(w), coefficients indexed by power;
  // the denominator has no zeros in the closed unit disk.
  std::vector<Complex> numerator_unit() const;
  std::vector<Complex> denominator_unit() const;

  // (1 - |B(w)|^2) / (1 - |w|^2), evaluated without cancellation; on the
  // circle it equals |dB/dw|.
  double hyperbolic_defect_unit(Complex w) const;

 private:
  friend BlaschkeProduct blaschke_from_zeros(const Domain&, std::span<const BlaschkeZero>, Normalization);
  friend BlaschkeProduct with_unit_zeros(const BlaschkeProduct&, std::vector<BlaschkeZero>);
  Domain domain_;
  Normalization norm_ = Normalization::kCanonical;
  std::vector<BlaschkeZero> zeros_;
};

// Zeros are given in the coordinates of the domain. Throws
// std::invalid_argument naming the offending zero when one lies outside
// the domain or in its boundary guard band, or has multiplicity < 1.
BlaschkeProduct blaschke_from_zeros(const Domain& domain, std::span<const BlaschkeZero> zeros,
                                    Normalization norm = Normalization::kCanonical);

// Throws std::invalid_argument when z lies outside the closed domain.
Complex blaschke_eval(const BlaschkeProduct& b, Complex z);
// dB/dz.
Complex blaschke_derivative(const BlaschkeProduct& b, Complex z);

// Per-location maximum multiplicity. Throws on mixed domains.
BlaschkeProduct blaschke_lcm(std::span<const BlaschkeProduct> bs);
// Product: multiplicities add.
BlaschkeProduct blaschke_product(std::span<const BlaschkeProduct> bs);
BlaschkeProduct blaschke_radical(const BlaschkeProduct& b);

struct BlaschkeCounts {
  int total = 0;     // N
  int distinct = 0;  // N~
};
BlaschkeCounts blaschke_counts(const BlaschkeProduct& b);

// |B'(zeta)| on the boundary, sum_k m_k (1 - |a_k|^2) / |w - a_k|^2 / R with
// w = phi(zeta). Throws std::invalid_argument off the boundary band.
double boundary_derivative_modulus(const BlaschkeProduct& b, Complex zeta);

struct DirichletNorm {
  double value = 0;     // average of the two routes
  double area = 0;      // (1/pi) int |B'|^2 dA
  double boundary = 0;  // (1/2pi) int |B'| ds
  double area_error = 0;
  double boundary_error = 0;
};

// Both routes; throws Inconsistency("quadrature inconsistency") if they
// differ by more than 10 tol (relative to max(1, N)).
DirichletNorm dirichlet_norm_sq(const BlaschkeProduct& b, const QuadratureSpec& spec);

// |f^(k)(0)/k!| <= c * q^k for every k beyond the truncation order.
struct GeometricTail {
  double c = 0;
  double q = 0;
};

struct TaylorExpansion {
  PowerSeries series;
  GeometricTail tail;
  double coefficient_bound = 0;  // c q^(M+1): largest dropped coefficient
};

// Taylor coefficients in w = phi(z) about w = 0 to order M, with a Cauchy
// estimate for the dropped coefficients. O(N M) work.
TaylorExpansion taylor_coefficients(const BlaschkeProduct& b, int order);

// Smallest power-of-two order >= 64 whose D_1 tail bound is at most tol,
// capped at max_order.
int taylor_order_for(const BlaschkeProduct& b, double tol, int max_order = 1 << 22);

// Multiplies a series (in w) by B with the same O(N M) recurrences.
PowerSeries multiply_by_blaschke(const PowerSeries& s, const BlaschkeProduct& b);

struct NormEstimate {
  double value = 0;
  double tail_bound = 0;  // bound on the dropped part of the sum
};

// sum_{k>=1} k^alpha |f_k|^2 over the stored coefficients. With a tail
// model the dropped terms k > M are bounded by sum k c^2 q^(2k).
// Throws std::invalid_argument unless 0 < alpha <= 1.
NormEstimate d_alpha_norm_sq(const PowerSeries& f, double alpha, const GeometricTail* tail = nullptr);

// Bound on sum_{k>M} k c^2 q^(2k).
double geometric_tail_sum(const GeometricTail& tail, int order);

}  // namespace abca
