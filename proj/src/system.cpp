#include "abca/system.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "abca/errors.hpp"
#include "abca/roots.hpp"
#include "abca/wronskian.hpp"

namespace abca {
namespace {

std::string format_point(Complex z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

// Determinant by Gaussian elimination with partial pivoting.
Complex determinant_lu(std::vector<Complex> a, int n) {
  Complex det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a[static_cast<std::size_t>(i * n + k)]) > std::abs(a[static_cast<std::size_t>(piv * n + k)])) piv = i;
    const Complex p = a[static_cast<std::size_t>(piv * n + k)];
    if (p == Complex(0, 0)) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(k * n + j)], a[static_cast<std::size_t>(piv * n + j)]);
      det = -det;
    }
    det *= p;
    for (int i = k + 1; i < n; ++i) {
      const Complex l = a[static_cast<std::size_t>(i * n + k)] / p;
      if (l == Complex(0, 0)) continue;
      for (int j = k + 1; j < n; ++j)
        a[static_cast<std::size_t>(i * n + j)] -= l * a[static_cast<std::size_t>(k * n + j)];
    }
  }
  return det;
}

WronskianHandle jet_wronskian(std::shared_ptr<const std::vector<AnalyticFunction>> fs, int n) {
  // Rows 0..n give W; replacing row n by row n+1 gives W'.
  auto eval = [fs, n](Complex z, bool bumped) {
    const int size = n + 1;
    std::vector<Complex> m(static_cast<std::size_t>(size * size));
    for (int j = 0; j < size; ++j) {
      const auto jet = (*fs)[static_cast<std::size_t>(j)].jet(z, n + 1);
      for (int i = 0; i < size; ++i) {
        const int row = (bumped && i == n) ? n + 1 : i;
        m[static_cast<std::size_t>(i * size + j)] = jet[static_cast<std::size_t>(row)];
      }
    }
    return determinant_lu(std::move(m), size);
  };
  return {[eval](Complex z) { return eval(z, false); }, [eval](Complex z) { return eval(z, true); }};
}

Complex factor_unit_constant(Complex a, Normalization norm) {
  if (norm == Normalization::kMobius || a == Complex(0, 0)) return 1;
  return -std::conj(a) / std::abs(a);
}

Complex factor_value(Complex a, Normalization norm, Complex w) {
  if (a == Complex(0, 0)) return w;
  return factor_unit_constant(a, norm) * (w - a) / (1.0 - std::conj(a) * w);
}

Complex horner(std::span<const Complex> c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

std::vector<BlaschkeZero> zeros_in_domain(const AnalyticFunction& f, const Domain& domain,
                                          const QuadratureSpec& spec, const std::string& name) {
  if (f.identically_zero())
    throw HypothesisViolation(name + " vanishes identically: it has infinitely many zeros");
  std::vector<BlaschkeZero> out;
  auto classify = [&](Complex z, int m) {
    switch (contains(domain, z)) {
      case Location::kInside:
        out.push_back({z, m});
        break;
      case Location::kBoundaryBand:
        throw HypothesisViolation(name + " has a zero on the boundary at " + format_point(z));
      case Location::kOutside:
        break;
    }
  };
  if (f.is_polynomial()) {
    for (const auto& [s, m] : squarefree_decomposition(f.polynomial())) {
      if (s.degree() == 1) {
        classify(-s.coeff(0).to_complex(), m);
      } else {
        const auto c = s.to_complex();
        for (const auto& r : poly_roots(c)) classify(r, m);
      }
    }
    return out;
  }
  if (!(domain == Domain::unit_disk()))
    throw std::invalid_argument("non-polynomial functions require the unit disk");
  if (const auto* b = f.blaschke()) return b->zeros();

  int winding = 0;
  try {
    winding = winding_count([&f](Complex z) { return f(z); }, domain, spec);
  } catch (const HypothesisViolation&) {
    throw HypothesisViolation(name + " has a zero on the boundary");
  }
  if (winding == 0) return out;
  auto num = f.rational_form().first;
  const auto roots = poly_roots(num);
  for (const auto& c : cluster_roots(roots, 1e-6)) classify(c.center, c.multiplicity);
  int total = 0;
  for (const auto& z : out) total += z.multiplicity;
  if (total != winding) {
    std::ostringstream os;
    os << "zero count of " << name << " from roots (" << total << ") disagrees with its winding number ("
       << winding << ")";
    throw Inconsistency(os.str());
  }
  return out;
}

AnalyticSystem build_system(std::vector<AnalyticFunction> fs, const Domain& domain, const QuadratureSpec& spec) {
  spec.validate();
  if (fs.size() < 2) throw std::invalid_argument("need at least two functions f_0, f_1");
  AnalyticSystem sys;
  sys.domain = domain;
  sys.n = static_cast<int>(fs.size()) - 1;
  sys.polynomial_path = std::all_of(fs.begin(), fs.end(), [](const auto& f) { return f.is_polynomial(); });
  if (!sys.polynomial_path && !(domain == Domain::unit_disk()))
    throw std::invalid_argument("non-polynomial functions require the unit disk");

  const AnalyticFunction total = AnalyticFunction::sum(fs);
  sys.functions = std::move(fs);
  sys.functions.push_back(total);

  for (std::size_t j = 0; j < sys.functions.size(); ++j) {
    const auto zeros = zeros_in_domain(sys.functions[j], domain, spec, "f_" + std::to_string(j));
    sys.blaschke.push_back(blaschke_from_zeros(domain, zeros));
  }
  sys.bigB = blaschke_lcm(sys.blaschke);
  sys.calB = blaschke_radical(blaschke_product(sys.blaschke));

  if (sys.polynomial_path) {
    std::vector<Polynomial> ps;
    for (int j = 0; j <= sys.n; ++j) ps.push_back(sys.functions[static_cast<std::size_t>(j)].polynomial());
    Polynomial w = wronskian_poly(ps);
    if (w.is_zero())
      throw HypothesisViolation("f_0..f_n are linearly dependent: the Wronskian vanishes identically");
    if (!(wronskian_derivative_poly(ps) == w.derivative()))
      throw Inconsistency("bumped-row determinant differs from the derivative of W");
    sys.w = handle_from_polynomial(w);
    sys.w_exact = std::move(w);
  } else {
    auto shared = std::make_shared<const std::vector<AnalyticFunction>>(sys.functions.begin(),
                                                                        sys.functions.end() - 1);
    sys.w = jet_wronskian(std::move(shared), sys.n);
    for (const auto& f : sys.functions)
      if (!f.is_polynomial()) {
        sys.notes.push_back("non-polynomial inputs: smoothness up to the boundary is assumed by construction");
        break;
      }
  }
  sys.w_boundary = check_boundary_invertibility(sys.w.value, domain, spec);
  return sys;
}

PowerSeries wronskian_taylor(const AnalyticSystem& sys, int order) {
  if (sys.w_exact) {
    const auto c = polynomial_recenter(sys.w_exact->to_complex(), sys.domain.center(), sys.domain.radius());
    return PowerSeries(c, order);
  }
  const int size = sys.n + 1;
  std::vector<std::vector<PowerSeries>> a(static_cast<std::size_t>(size), std::vector<PowerSeries>(static_cast<std::size_t>(size)));
  for (int j = 0; j < size; ++j) {
    PowerSeries s = sys.functions[static_cast<std::size_t>(j)].taylor(order + sys.n);
    for (int i = 0; i < size; ++i) {
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
      s = s.derivative();
    }
  }
  // Laplace expansion over row prefixes: dp[mask] sums signed products of
  // the first popcount(mask) rows using the columns in mask.
  const unsigned full = (1u << size) - 1;
  std::vector<PowerSeries> dp(full + 1);
  std::vector<char> has(full + 1, 0);
  dp[0] = PowerSeries({Complex(1.0)}, order + sys.n);
  has[0] = 1;
  for (unsigned mask = 0; mask < full; ++mask) {
    if (!has[mask] || dp[mask].is_zero()) continue;
    const int row = std::popcount(mask);
    for (int c = 0; c < size; ++c) {
      const unsigned bit = 1u << c;
      if (mask & bit) continue;
      const auto& entry = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
      if (entry.is_zero()) continue;
      PowerSeries term = dp[mask] * entry;
      if (std::popcount(mask >> (c + 1)) % 2 == 1) term *= Complex(-1.0);
      if (has[mask | bit]) {
        dp[mask | bit] += term;
      } else {
        dp[mask | bit] = std::move(term);
        has[mask | bit] = 1;
      }
    }
  }
  if (!has[full]) return PowerSeries(order);
  return dp[full].truncated(order);
}

Divisibility check_divisibility(const AnalyticSystem& sys, const QuadratureSpec& spec, double tol,
                                int series_order) {
  spec.validate();
  Divisibility d;
  const int n = sys.n;
  const Normalization norm = sys.bigB.normalization();
  const auto zeros = sys.bigB.unit_zeros();
  bool exact_ok = true;

  std::vector<Complex> q;
  if (sys.w_exact) {
    for (const auto& f : sys.functions) {
      for (const auto& [s, m] : squarefree_decomposition(f.polynomial())) {
        if (m <= n) continue;
        if (!divmod(*sys.w_exact, s.pow(m - n)).second.is_zero()) exact_ok = false;
      }
    }
    d.exact = true;
    q = polynomial_recenter(sys.w_exact->to_complex(), sys.domain.center(), sys.domain.radius());
  } else {
    const auto s = wronskian_taylor(sys, series_order);
    q.assign(s.coeffs().begin(), s.coeffs().end());
  }

  // Divide out (w - a)^(m - n) wherever the multiplicity in bigB exceeds n.
  for (const auto& z : zeros) {
    for (int e = 0; e < z.multiplicity - n; ++e) {
      if (q.empty()) break;
      double scale = 0;
      for (const auto& c : q) scale = std::max(scale, std::abs(c));
      std::vector<Complex> quot(q.size() - 1);
      Complex acc = 0;
      for (std::size_t j = q.size(); j-- > 0;) {
        acc = acc * z.location + q[j];
        if (j > 0) quot[j - 1] = acc;
      }
      d.max_remainder = std::max(d.max_remainder, std::abs(acc) / scale);
      q = std::move(quot);
    }
  }

  auto qs = std::make_shared<const std::vector<Complex>>(std::move(q));
  const Domain domain = sys.domain;
  d.F = [qs, zeros, n, norm, domain](Complex z) {
    const Complex w = to_unit(domain, z);
    Complex v = horner(*qs, w);
    for (const auto& zero : zeros) {
      const int e = zero.multiplicity - n;
      if (e > 0) {
        const Complex g = (1.0 - std::conj(zero.location) * w) / factor_unit_constant(zero.location, norm);
        for (int k = 0; k < e; ++k) v *= g;
      } else {
        const Complex b = factor_value(zero.location, norm, w);
        for (int k = 0; k < -e; ++k) v *= b;
      }
    }
    return v;
  };

  constexpr int kSamples = 1024;
  d.boundary_samples = kSamples;
  double wmax = 0;
  double gap = 0;
  for (int k = 0; k < kSamples; ++k) {
    const Complex zeta = domain.boundary_point(2 * std::numbers::pi * k / kSamples);
    const double wm = std::abs(sys.w.value(zeta));
    wmax = std::max(wmax, wm);
    gap = std::max(gap, std::abs(std::abs(d.F(zeta)) - wm));
  }
  d.modulus_gap = wmax > 0 ? gap / wmax : gap;

  const bool remainder_ok = d.exact || d.max_remainder <= tol;
  d.ok = exact_ok && remainder_ok && d.modulus_gap <= tol;
  if (!d.ok) {
    std::ostringstream os;
    os << "W * calB^n is not divisible by bigB (";
    if (d.exact && !exact_ok) os << "exact vanishing orders too low";
    else if (!remainder_ok) os << "remainder " << d.max_remainder;
    else os << "boundary modulus gap " << d.modulus_gap;
    os << ")";
    throw Inconsistency(os.str());
  }
  return d;
}

}  // namespace abca
