#include "abca/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "abca/errors.hpp"
#include "abca/numeric.hpp"

namespace abca {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(double x) { return std::isfinite(x); }
bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool close_enough(double last, double previous, double tol) {
  return std::abs(last - previous) <= tol * std::abs(last);
}

// Implicit QL on a symmetric tridiagonal matrix. On return d holds the
// eigenvalues and z the first components of the normalized eigenvectors.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw ConvergenceFailure("Golub-Welsch eigenvalue iteration stalled", d[l], d[l]);
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          e[i + 1] = (r = std::hypot(f, g));
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          d[i + 1] = g + (p = s * r);
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

const GaussRule& cached_gauss_jacobi(int n, double a) {
  static std::mutex mu;
  static std::map<std::pair<int, double>, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, a});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, a), gauss_jacobi(n, a, 0.0)).first;
  return it->second;
}

Complex unit_point(double r, double theta) { return std::polar(r, theta); }

// Mean of h over the circle |w| = r in unit coordinates.
double ring_mean(const RealEvaluator& h, const Domain& domain, double r, const QuadratureSpec& spec) {
  int n = spec.boundary_nodes;
  std::vector<double> vals(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    vals[static_cast<std::size_t>(k)] = h(from_unit(domain, unit_point(r, kTwoPi * k / n)));
    if (!finite(vals[static_cast<std::size_t>(k)])) throw HypothesisViolation("non-finite integrand inside the disk");
  }
  double est = pairwise_sum<double>(vals) / n;
  for (int level = 0; level < spec.refine_limit; ++level) {
    for (int k = 0; k < n; ++k) {
      vals[static_cast<std::size_t>(k)] = h(from_unit(domain, unit_point(r, kTwoPi * (k + 0.5) / n)));
      if (!finite(vals[static_cast<std::size_t>(k)])) throw HypothesisViolation("non-finite integrand inside the disk");
    }
    const double next = 0.5 * (est + pairwise_sum<double>(vals) / n);
    n *= 2;
    vals.resize(static_cast<std::size_t>(n));
    const bool done = std::abs(next - est) <= 0.1 * spec.tol * std::abs(next);
    const double prev = est;
    est = next;
    if (done) return est;
    if (level + 1 == spec.refine_limit)
      throw ConvergenceFailure("ring quadrature did not converge", est, prev);
  }
  return est;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (boundary_nodes < 64 || (boundary_nodes & (boundary_nodes - 1)) != 0)
    throw std::invalid_argument("boundary_nodes must be a power of two and at least 64");
  if (radial_nodes < 2) throw std::invalid_argument("radial_nodes must be at least 2");
  if (refine_limit < 1 || refine_limit > 20) throw std::invalid_argument("refine_limit must lie in [1, 20]");
  if (!(tol > 0) || !std::isfinite(tol)) throw std::invalid_argument("tol must be positive");
}

GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi needs n >= 1");
  if (!(a > -1) || !(b > -1)) throw std::invalid_argument("gauss_jacobi needs a, b > -1");
  const double ab = a + b;
  std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * k + ab;
    d[static_cast<std::size_t>(k)] = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (t * (t + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + ab;
    const double beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
    e[static_cast<std::size_t>(k - 1)] = std::sqrt(beta);
  }
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  z[0] = 1.0;
  tridiagonal_ql(d, e, z);

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                              std::lgamma(ab + 2.0));
  std::vector<std::size_t> order(d.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
  GaussRule rule;
  for (std::size_t i : order) {
    rule.nodes.push_back(d[i]);
    rule.weights.push_back(mu0 * z[i] * z[i]);
  }
  return rule;
}

QuadratureResult boundary_mean(const RealEvaluator& h, const Domain& domain, const QuadratureSpec& spec) {
  spec.validate();
  int n = spec.boundary_nodes;
  std::vector<double> vals(static_cast<std::size_t>(n));
  auto sample = [&](double offset) {
    for (int k = 0; k < n; ++k) {
      const double v = h(domain.boundary_point(kTwoPi * (k + offset) / n));
      if (!finite(v)) throw HypothesisViolation("non-finite value on boundary");
      vals[static_cast<std::size_t>(k)] = v;
    }
    return pairwise_sum<double>(vals) / n;
  };
  double est = sample(0.0);
  for (int level = 0; level < spec.refine_limit; ++level) {
    const double next = 0.5 * (est + sample(0.5));
    n *= 2;
    vals.resize(static_cast<std::size_t>(n));
    if (close_enough(next, est, spec.tol))
      return {next * domain.radius(), std::abs(next - est) * domain.radius(), n};
    if (level + 1 == spec.refine_limit) {
      // Kinks (|g| through a zero on the circle) stall the trapezoid rule;
      // adaptive Gauss-Kronrod localizes them.
      double err = 0;
      const double gk = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
          [&](double t) {
            const double v = h(domain.boundary_point(t));
            if (!finite(v)) throw HypothesisViolation("non-finite value on boundary");
            return v;
          },
          0.0, kTwoPi, 40, spec.tol, &err);
      const double mean = gk / kTwoPi;
      if (err / kTwoPi <= 10 * spec.tol * std::max(1.0, std::abs(mean)) &&
          std::abs(mean - next) <= 1e-6 * std::max(1.0, std::abs(mean)))
        return {mean * domain.radius(), err / kTwoPi * domain.radius(), n};
      throw ConvergenceFailure("boundary quadrature did not converge", next * domain.radius(),
                               est * domain.radius());
    }
    est = next;
  }
  return {est * domain.radius(), 0, n};
}

BoundaryExtrema boundary_extrema(const Evaluator& g, const Domain& domain, const QuadratureSpec& spec) {
  spec.validate();
  const int n = std::max(4096, spec.boundary_nodes);
  const double h = kTwoPi / n;
  auto mod = [&](double theta) {
    const Complex v = g(domain.boundary_point(theta));
    if (!finite(v)) throw HypothesisViolation("non-finite value on boundary");
    return std::abs(v);
  };
  std::vector<double> vals(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) vals[static_cast<std::size_t>(k)] = mod(h * k);

  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) idx[static_cast<std::size_t>(k)] = k;
  auto by_value = [&](int i, int j) {
    const double a = vals[static_cast<std::size_t>(i)], b = vals[static_cast<std::size_t>(j)];
    return a != b ? a < b : i < j;
  };
  std::sort(idx.begin(), idx.end(), by_value);

  // Golden-section search on [c - h, c + h]; sign = +1 maximizes.
  auto refine = [&](int k, double sign) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = h * (k - 1), hi = h * (k + 1);
    double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
    double f1 = sign * mod(x1), f2 = sign * mod(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
      if (f1 > f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - ratio * (hi - lo);
        f1 = sign * mod(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + ratio * (hi - lo);
        f2 = sign * mod(x2);
      }
    }
    return f1 > f2 ? std::pair{x1, sign * f1} : std::pair{x2, sign * f2};
  };

  BoundaryExtrema out;
  out.inf = vals[static_cast<std::size_t>(idx.front())];
  out.theta_inf = h * idx.front();
  out.sup = vals[static_cast<std::size_t>(idx.back())];
  out.theta_sup = h * idx.back();
  const int picks = std::min(3, n);
  for (int p = 0; p < picks; ++p) {
    const auto [tmin, vmin] = refine(idx[static_cast<std::size_t>(p)], -1.0);
    if (vmin < out.inf) {
      out.inf = vmin;
      out.theta_inf = tmin;
    }
    const auto [tmax, vmax] = refine(idx[static_cast<std::size_t>(n - 1 - p)], 1.0);
    if (vmax > out.sup) {
      out.sup = vmax;
      out.theta_sup = tmax;
    }
  }
  return out;
}

QuadratureResult boundary_integral(const Evaluator& g, const Domain& domain, BoundaryKind kind,
                                   const QuadratureSpec& spec) {
  if (kind == BoundaryKind::kSup) {
    const BoundaryExtrema ext = boundary_extrema(g, domain, spec);
    return {ext.sup, 0, std::max(4096, spec.boundary_nodes)};
  }
  return boundary_mean([&g](Complex z) { return std::abs(g(z)); }, domain, spec);
}

QuadratureResult area_integral_weighted(const RealEvaluator& h, const Domain& domain, double s,
                                        const QuadratureSpec& spec) {
  spec.validate();
  if (!(s > -1.0)) throw std::invalid_argument("weight exponent must exceed -1");
  const double scale = domain.radius() * domain.radius() * std::pow(2.0, -s);
  auto estimate = [&](int n) {
    const GaussRule& rule = cached_gauss_jacobi(n, s);
    std::vector<double> terms(rule.nodes.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const double r = 0.5 * (1.0 + rule.nodes[i]);
      terms[i] = rule.weights[i] * r * ring_mean(h, domain, r, spec);
    }
    return scale * pairwise_sum<double>(terms);
  };
  int n = spec.radial_nodes;
  double est = estimate(n);
  for (int level = 0; level < spec.refine_limit; ++level) {
    n *= 2;
    const double next = estimate(n);
    if (close_enough(next, est, spec.tol)) return {next, std::abs(next - est), n};
    if (level + 1 == spec.refine_limit)
      throw ConvergenceFailure("area quadrature did not converge", next, est);
    est = next;
  }
  return {est, 0, n};
}

QuadratureResult area_integral_disk(const Evaluator& g, const Domain& domain, double weight_exponent,
                                    const QuadratureSpec& spec) {
  return area_integral_weighted([&g](Complex z) { return std::norm(g(z)); }, domain, weight_exponent, spec);
}

int winding_count(const Evaluator& f, const Domain& domain, const QuadratureSpec& spec) {
  spec.validate();
  const int n = spec.boundary_nodes;
  std::vector<Complex> vals(static_cast<std::size_t>(n));
  double maxmod = 0;
  for (int k = 0; k < n; ++k) {
    const Complex v = f(domain.boundary_point(kTwoPi * k / n));
    if (!finite(v)) throw HypothesisViolation("non-finite value on boundary");
    vals[static_cast<std::size_t>(k)] = v;
    maxmod = std::max(maxmod, std::abs(v));
  }
  const double threshold = 1e-8 * maxmod;
  auto check = [&](Complex v) {
    if (!finite(v)) throw HypothesisViolation("non-finite value on boundary");
    if (!(std::abs(v) > threshold)) throw HypothesisViolation("zero too close to boundary");
  };
  for (const auto& v : vals) check(v);

  auto arc = [&](auto&& self, double ta, Complex fa, double tb, Complex fb, int depth) -> double {
    const double d = std::arg(fb / fa);
    if (std::abs(d) < std::numbers::pi / 2) return d;
    if (depth == 40) throw HypothesisViolation("zero too close to boundary");
    const double tm = 0.5 * (ta + tb);
    const Complex fm = f(domain.boundary_point(tm));
    check(fm);
    return self(self, ta, fa, tm, fm, depth + 1) + self(self, tm, fm, tb, fb, depth + 1);
  };
  std::vector<double> incs(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int next = (k + 1) % n;
    incs[static_cast<std::size_t>(k)] = arc(arc, kTwoPi * k / n, vals[static_cast<std::size_t>(k)],
                                            kTwoPi * (k + 1) / n, vals[static_cast<std::size_t>(next)], 0);
  }
  const double turns = pairwise_sum<double>(incs) / kTwoPi;
  const long count = std::lround(turns);
  if (std::abs(turns - static_cast<double>(count)) > 0.1)
    throw Inconsistency("winding number is not close to an integer");
  return static_cast<int>(count);
}

}  // namespace abca
