#include "abca/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "abca/errors.hpp"

namespace abca {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerValue {
  Complex p;
  Complex dp;
  double bound;  // sum |c_k| |z|^k, the rounding scale of p(z)
};

HornerValue horner(std::span<const Complex> c, Complex z) {
  Complex p = c.back();
  Complex dp = 0;
  double bound = std::abs(c.back());
  const double az = std::abs(z);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
    bound = bound * az + std::abs(c[k]);
  }
  return {p, dp, bound};
}

std::vector<Complex> differentiate(std::span<const Complex> c) {
  std::vector<Complex> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<double>(k));
  return d;
}

// Aberth only resolves an m-fold root to about eps^(1/m). Replace each tight
// group of iterates by one point when p and its first m-1 derivatives all
// vanish there to rounding level; leave genuinely distinct close roots alone.
void polish_multiple_roots(std::span<const Complex> c, std::vector<Complex>& z, double tol) {
  double scale = 1;
  for (const auto& x : z) scale = std::max(scale, std::abs(x));
  const double radius = 1e-4 * scale;
  std::vector<char> used(z.size(), 0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> group{i};
    used[i] = 1;
    for (std::size_t g = 0; g < group.size(); ++g)
      for (std::size_t j = 0; j < z.size(); ++j)
        if (!used[j] && std::abs(z[j] - z[group[g]]) < radius) {
          used[j] = 1;
          group.push_back(j);
        }
    const std::size_t m = group.size();
    if (m < 2) continue;

    Complex center = 0;
    for (std::size_t j : group) center += z[j];
    center /= static_cast<double>(m);
    std::vector<std::vector<Complex>> derivs{std::vector<Complex>(c.begin(), c.end())};
    for (std::size_t k = 1; k < m + 1 && derivs.back().size() > 1; ++k) derivs.push_back(differentiate(derivs.back()));
    if (derivs.size() < m + 1) continue;
    const auto& q = derivs[m - 1];
    const auto& dq = derivs[m];
    Complex x = center;
    for (int it = 0; it < 50; ++it) {
      const Complex d = horner(dq, x).p;
      if (d == Complex(0, 0)) break;
      const Complex step = horner(q, x).p / d;
      x -= step;
      if (std::abs(step) <= 4 * kEps * std::max(1.0, std::abs(x))) break;
    }
    if (std::abs(x - center) > radius) continue;
    bool multiple = true;
    for (std::size_t k = 0; k < m && multiple; ++k) multiple = normalized_residual(derivs[k], x) <= tol;
    if (multiple)
      for (std::size_t j : group) z[j] = x;
  }
}

}  // namespace

double normalized_residual(std::span<const Complex> coeffs, Complex r) {
  double cmax = 0;
  for (const auto& c : coeffs) cmax = std::max(cmax, std::abs(c));
  if (cmax == 0) return 0;
  const int deg = static_cast<int>(coeffs.size()) - 1;
  const double scale = cmax * std::pow(std::max(1.0, std::abs(r)), deg);
  return std::abs(horner(coeffs, r).p) / scale;
}

std::vector<Complex> poly_roots(std::span<const Complex> coeffs, const RootOptions& opts) {
  std::size_t top = coeffs.size();
  while (top > 0 && coeffs[top - 1] == Complex(0, 0)) --top;
  if (top < 2) throw std::invalid_argument("poly_roots needs degree >= 1");
  for (std::size_t k = 0; k < top; ++k)
    if (!std::isfinite(coeffs[k].real()) || !std::isfinite(coeffs[k].imag()))
      throw std::invalid_argument("poly_roots: non-finite coefficient");

  // Roots at the origin are exact; factor them out.
  std::size_t low = 0;
  while (coeffs[low] == Complex(0, 0)) ++low;
  std::vector<Complex> roots(low, Complex(0, 0));
  const std::span<const Complex> c = coeffs.subspan(low, top - low);
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 0) return roots;
  if (n == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }

  const double radius = std::pow(std::abs(c[0]) / std::abs(c[n]), 1.0 / n);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.4);

  std::vector<char> done(z.size(), 0);
  std::size_t remaining = z.size();
  for (int it = 0; it < opts.max_iterations && remaining > 0; ++it) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      const HornerValue h = horner(c, z[i]);
      if (std::abs(h.p) <= 4 * kEps * h.bound) {
        done[i] = 1;
        --remaining;
        continue;
      }
      Complex sum = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      Complex step;
      if (h.dp == Complex(0, 0)) {
        step = Complex(radius + 1.0, 0) * 1e-3 * std::polar(1.0, 1.0 + it);
      } else {
        const Complex ratio = h.p / h.dp;
        step = ratio / (1.0 - ratio * sum);
      }
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = Complex(1e-3, 1e-3);
      z[i] -= step;
      if (std::abs(step) <= 4 * kEps * std::abs(z[i])) {
        done[i] = 1;
        --remaining;
      }
    }
  }

  if (remaining == 0) polish_multiple_roots(c, z, opts.residual_tol);

  std::vector<double> residuals;
  residuals.reserve(z.size());
  bool ok = remaining == 0;
  for (const auto& r : z) {
    residuals.push_back(normalized_residual(c, r));
    if (!(residuals.back() <= opts.residual_tol)) ok = false;
  }
  if (!ok) throw RootFindingFailure("Aberth iteration did not converge", z, residuals);
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<RootCluster> cluster_roots(std::span<const Complex> roots, double radius) {
  std::vector<std::size_t> parent(roots.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) < radius) {
        const std::size_t a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }

  std::vector<RootCluster> out;
  std::vector<std::size_t> slot(roots.size(), roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const std::size_t r = find(i);
    if (slot[r] == roots.size()) {
      slot[r] = out.size();
      out.push_back({});
    }
    auto& cl = out[slot[r]];
    cl.center += roots[i];
    ++cl.multiplicity;
  }
  for (auto& cl : out) cl.center /= static_cast<double>(cl.multiplicity);
  return out;
}

}  // namespace abca
