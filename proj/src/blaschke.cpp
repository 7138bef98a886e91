#include "abca/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "abca/errors.hpp"
#include "abca/numeric.hpp"

namespace abca {
namespace {

constexpr double kMergeRadius = 1e-6;

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

void merge_into(std::vector<BlaschkeZero>& zs, Complex w, int m) {
  for (auto& z : zs) {
    if (std::abs(z.location - w) < kMergeRadius) {
      const double total = z.multiplicity + m;
      z.location = (z.location * static_cast<double>(z.multiplicity) + w * static_cast<double>(m)) / total;
      z.multiplicity += m;
      return;
    }
  }
  zs.push_back({w, m});
}

int find_zero(const std::vector<BlaschkeZero>& zs, Complex w) {
  for (std::size_t i = 0; i < zs.size(); ++i)
    if (std::abs(zs[i].location - w) < kMergeRadius) return static_cast<int>(i);
  return -1;
}

// Unimodular normalizer of a canonical factor.
Complex unit_factor(Complex a) { return std::conj(a) / std::abs(a); }

Complex factor_value(Complex a, Normalization norm, Complex w) {
  if (a == Complex(0, 0)) return w;
  const Complex den = 1.0 - std::conj(a) * w;
  if (norm == Normalization::kMobius) return (w - a) / den;
  return unit_factor(a) * (a - w) / den;
}

Complex factor_derivative(Complex a, Normalization norm, Complex w) {
  if (a == Complex(0, 0)) return 1.0;
  const Complex den = 1.0 - std::conj(a) * w;
  const Complex d = (1.0 - std::norm(a)) / (den * den);
  return norm == Normalization::kMobius ? d : -unit_factor(a) * d;
}

std::vector<Complex> poly_mul(const std::vector<Complex>& p, const std::vector<Complex>& q) {
  std::vector<Complex> r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

// Multiplies the dense coefficient vector s in place by one factor b_a.
constexpr double kTiny = std::numeric_limits<double>::min();

void apply_factor(std::vector<Complex>& s, Complex a, Normalization norm) {
  if (a == Complex(0, 0)) {
    for (std::size_t k = s.size(); k-- > 1;) s[k] = s[k - 1];
    if (!s.empty()) s[0] = 0;
    return;
  }
  const Complex ab = std::conj(a);
  const Complex u = unit_factor(a);
  Complex prev_t = 0, prev_s = 0;
  for (auto& sk : s) {
    const Complex cur_s = sk;
    const Complex t = norm == Normalization::kMobius ? ab * prev_t + prev_s - a * cur_s
                                                     : ab * prev_t + u * (a * cur_s - prev_s);
    prev_s = cur_s;
    // Subnormals are flushed: they cost far more than they are worth.
    prev_t = std::abs(t.real()) < kTiny && std::abs(t.imag()) < kTiny ? Complex(0, 0) : t;
    sk = prev_t;
  }
}

// Slowly decaying factors first, so intermediate coefficients stay normal.
std::vector<BlaschkeZero> by_decreasing_modulus(std::vector<BlaschkeZero> zs) {
  std::stable_sort(zs.begin(), zs.end(),
                   [](const BlaschkeZero& a, const BlaschkeZero& b) { return std::abs(a.location) > std::abs(b.location); });
  return zs;
}

// log of sum_{k>M} k x^k for 0 < x < 1.
double log_tail_series(double x, int order) {
  const double m = order;
  return (m + 1) * std::log(x) + std::log((m + 1) - m * x) - 2 * std::log1p(-x);
}

// Cauchy estimate on |w| = r, 1 < r < 1/rho, optimized for the tail past M.
GeometricTail cauchy_tail(const BlaschkeProduct& b, int order) {
  const double rho = b.rho();
  if (rho == 0 && order >= b.count()) return {0, 0};
  const double r_max = rho > 0 ? 1 / rho : 1e6;
  auto log_c = [&](double r) {
    double acc = 0;
    for (const auto& z : b.unit_zeros()) {
      const double a = std::abs(z.location);
      acc += z.multiplicity * std::log((r - a) / (1 - r * a));
    }
    return acc;
  };
  auto objective = [&](double r) { return 2 * log_c(r) + log_tail_series(1 / (r * r), order); };
  double best_r = 0, best = std::numeric_limits<double>::infinity();
  const int grid = 400;
  for (int i = 1; i < grid; ++i) {
    // Geometric spacing toward both ends of (1, r_max).
    const double t = static_cast<double>(i) / grid;
    const double r = std::exp(std::log(r_max) * t);
    const double v = objective(r);
    if (v < best) {
      best = v;
      best_r = r;
    }
  }
  if (best_r == 0) return {std::numeric_limits<double>::infinity(), 1};
  return {std::exp(log_c(best_r)), 1 / best_r};
}

}  // namespace

std::vector<BlaschkeZero> BlaschkeProduct::zeros() const {
  std::vector<BlaschkeZero> out;
  for (const auto& z : zeros_) out.push_back({from_unit(domain_, z.location), z.multiplicity});
  return out;
}

int BlaschkeProduct::count() const {
  int n = 0;
  for (const auto& z : zeros_) n += z.multiplicity;
  return n;
}

double BlaschkeProduct::rho() const {
  double r = 0;
  for (const auto& z : zeros_) r = std::max(r, std::abs(z.location));
  return r;
}

Complex BlaschkeProduct::eval_unit(Complex w) const {
  Complex acc = 1;
  for (const auto& z : zeros_) {
    const Complex f = factor_value(z.location, norm_, w);
    for (int k = 0; k < z.multiplicity; ++k) acc *= f;
  }
  return acc;
}

Complex BlaschkeProduct::derivative_unit(Complex w) const {
  // Product rule; stays finite at the zeros, unlike B * sum b'/b.
  Complex total = 0;
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    const auto& zi = zeros_[i];
    const Complex fi = factor_value(zi.location, norm_, w);
    Complex term = static_cast<double>(zi.multiplicity) * factor_derivative(zi.location, norm_, w);
    for (int k = 1; k < zi.multiplicity; ++k) term *= fi;
    for (std::size_t j = 0; j < zeros_.size(); ++j) {
      if (j == i) continue;
      const Complex fj = factor_value(zeros_[j].location, norm_, w);
      for (int k = 0; k < zeros_[j].multiplicity; ++k) term *= fj;
    }
    total += term;
  }
  return total;
}

std::vector<Complex> BlaschkeProduct::numerator_unit() const {
  std::vector<Complex> p{1};
  for (const auto& z : zeros_) {
    const Complex a = z.location;
    std::vector<Complex> f;
    if (a == Complex(0, 0))
      f = {0, 1};
    else if (norm_ == Normalization::kMobius)
      f = {-a, 1};
    else
      f = {unit_factor(a) * a, -unit_factor(a)};
    for (int k = 0; k < z.multiplicity; ++k) p = poly_mul(p, f);
  }
  return p;
}

std::vector<Complex> BlaschkeProduct::denominator_unit() const {
  std::vector<Complex> p{1};
  for (const auto& z : zeros_) {
    if (z.location == Complex(0, 0)) continue;
    const std::vector<Complex> f{1, -std::conj(z.location)};
    for (int k = 0; k < z.multiplicity; ++k) p = poly_mul(p, f);
  }
  return p;
}

double BlaschkeProduct::hyperbolic_defect_unit(Complex w) const {
  double g = 0;
  for (const auto& z : zeros_) {
    const Complex a = z.location;
    const double poisson = (1 - std::norm(a)) / std::norm(1.0 - std::conj(a) * w);
    const double mod2 = std::norm(factor_value(a, norm_, w));
    for (int k = 0; k < z.multiplicity; ++k) g = poisson + mod2 * g;
  }
  return g;
}

BlaschkeProduct blaschke_from_zeros(const Domain& domain, std::span<const BlaschkeZero> zeros,
                                    Normalization norm) {
  BlaschkeProduct b(domain, norm);
  for (const auto& z : zeros) {
    if (z.multiplicity < 1)
      throw std::invalid_argument("zero " + describe(z.location) + " has multiplicity < 1");
    if (contains(domain, z.location) != Location::kInside)
      throw std::invalid_argument("zero " + describe(z.location) + " is not inside the domain");
    merge_into(b.zeros_, to_unit(domain, z.location), z.multiplicity);
  }
  return b;
}

BlaschkeProduct with_unit_zeros(const BlaschkeProduct& like, std::vector<BlaschkeZero> zeros) {
  BlaschkeProduct b(like.domain(), like.normalization());
  for (const auto& z : zeros) merge_into(b.zeros_, z.location, z.multiplicity);
  return b;
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) {
  if (contains(b.domain(), z) == Location::kOutside)
    throw std::invalid_argument("point " + describe(z) + " is outside the closed domain");
  return b.eval_unit(to_unit(b.domain(), z));
}

Complex blaschke_derivative(const BlaschkeProduct& b, Complex z) {
  return b.derivative_unit(to_unit(b.domain(), z)) / b.domain().radius();
}

namespace {

void require_same_domain(std::span<const BlaschkeProduct> bs) {
  for (const auto& b : bs)
    if (!(b.domain() == bs.front().domain()))
      throw std::invalid_argument("Blaschke products live on mixed domains");
}

}  // namespace

BlaschkeProduct blaschke_lcm(std::span<const BlaschkeProduct> bs) {
  if (bs.empty()) return {};
  require_same_domain(bs);
  std::vector<BlaschkeZero> acc;
  for (const auto& b : bs) {
    for (const auto& z : b.unit_zeros()) {
      const int i = find_zero(acc, z.location);
      if (i < 0)
        acc.push_back(z);
      else
        acc[static_cast<std::size_t>(i)].multiplicity = std::max(acc[static_cast<std::size_t>(i)].multiplicity, z.multiplicity);
    }
  }
  return with_unit_zeros(bs.front(), std::move(acc));
}

BlaschkeProduct blaschke_product(std::span<const BlaschkeProduct> bs) {
  if (bs.empty()) return {};
  require_same_domain(bs);
  std::vector<BlaschkeZero> acc;
  for (const auto& b : bs) acc.insert(acc.end(), b.unit_zeros().begin(), b.unit_zeros().end());
  return with_unit_zeros(bs.front(), std::move(acc));
}

BlaschkeProduct blaschke_radical(const BlaschkeProduct& b) {
  std::vector<BlaschkeZero> zs = b.unit_zeros();
  for (auto& z : zs) z.multiplicity = 1;
  return with_unit_zeros(b, std::move(zs));
}

BlaschkeCounts blaschke_counts(const BlaschkeProduct& b) { return {b.count(), b.distinct()}; }

double boundary_derivative_modulus(const BlaschkeProduct& b, Complex zeta) {
  if (contains(b.domain(), zeta) != Location::kBoundaryBand)
    throw std::invalid_argument("point " + describe(zeta) + " is not on the boundary");
  Complex w = to_unit(b.domain(), zeta);
  w /= std::abs(w);
  double sum = 0;
  for (const auto& z : b.unit_zeros())
    sum += z.multiplicity * (1 - std::norm(z.location)) / std::norm(w - z.location);
  return sum / b.domain().radius();
}

DirichletNorm dirichlet_norm_sq(const BlaschkeProduct& b, const QuadratureSpec& spec) {
  DirichletNorm out;
  const auto area = area_integral_disk([&b](Complex z) { return blaschke_derivative(b, z); }, b.domain(), 0, spec);
  const auto bnd = boundary_mean(
      [&b](Complex z) {
        Complex w = to_unit(b.domain(), z);
        w /= std::abs(w);
        double sum = 0;
        for (const auto& zz : b.unit_zeros())
          sum += zz.multiplicity * (1 - std::norm(zz.location)) / std::norm(w - zz.location);
        return sum / b.domain().radius();
      },
      b.domain(), spec);
  out.area = area.value;
  out.boundary = bnd.value;
  out.area_error = area.error_estimate;
  out.boundary_error = bnd.error_estimate;
  out.value = 0.5 * (out.area + out.boundary);
  if (std::abs(out.area - out.boundary) > 10 * spec.tol * std::max(1.0, std::abs(out.boundary)))
    throw Inconsistency("quadrature inconsistency");
  return out;
}

double geometric_tail_sum(const GeometricTail& tail, int order) {
  if (tail.c == 0) return 0;
  if (!(tail.q < 1) || !std::isfinite(tail.c)) return std::numeric_limits<double>::infinity();
  if (tail.q == 0) return 0;
  return std::exp(2 * std::log(tail.c) + log_tail_series(tail.q * tail.q, order));
}

TaylorExpansion taylor_coefficients(const BlaschkeProduct& b, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  std::vector<Complex> s(static_cast<std::size_t>(order) + 1, Complex(0, 0));
  s[0] = 1;
  for (const auto& z : by_decreasing_modulus(b.unit_zeros()))
    for (int k = 0; k < z.multiplicity; ++k) apply_factor(s, z.location, b.normalization());
  TaylorExpansion out;
  out.series = PowerSeries(std::move(s), order);
  out.tail = cauchy_tail(b, order);
  out.coefficient_bound = out.tail.c == 0 ? 0 : out.tail.c * std::pow(out.tail.q, order + 1);
  return out;
}

int taylor_order_for(const BlaschkeProduct& b, double tol, int max_order) {
  int m = 64;
  while (m < max_order && geometric_tail_sum(cauchy_tail(b, m), m) > tol) m *= 2;
  return std::min(m, max_order);
}

PowerSeries multiply_by_blaschke(const PowerSeries& s, const BlaschkeProduct& b) {
  std::vector<Complex> c(static_cast<std::size_t>(s.order()) + 1);
  for (int k = 0; k <= std::min(s.effective_degree(), s.order()); ++k) c[static_cast<std::size_t>(k)] = s.coeff(k);
  for (const auto& z : by_decreasing_modulus(b.unit_zeros()))
    for (int k = 0; k < z.multiplicity; ++k) apply_factor(c, z.location, b.normalization());
  return PowerSeries(std::move(c), s.order());
}

NormEstimate d_alpha_norm_sq(const PowerSeries& f, double alpha, const GeometricTail* tail) {
  if (!(alpha > 0) || alpha > 1) throw std::invalid_argument("alpha must lie in (0, 1]");
  std::vector<double> terms;
  const int top = std::min(f.effective_degree(), f.order());
  for (int k = 1; k <= top; ++k) terms.push_back(std::pow(static_cast<double>(k), alpha) * std::norm(f.coeff(k)));
  NormEstimate out;
  out.value = pairwise_sum<double>(terms);
  if (tail) out.tail_bound = geometric_tail_sum(*tail, f.order());
  return out;
}

}  // namespace abca
