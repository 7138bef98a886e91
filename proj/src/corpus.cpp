#include "abca/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace abca {

std::uint64_t corpus_seed() {
  const char* s = std::getenv("ABC_ANALYTICA_SEED");
  if (!s) return kDefaultSeed;
  const std::string text(s);
  if (text.empty() || text.size() > 20 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("ABC_ANALYTICA_SEED must be a decimal unsigned integer");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("ABC_ANALYTICA_SEED must be a decimal unsigned integer");
  }
}

GaussianRational random_point(std::mt19937_64& rng, double min_modulus, double max_modulus, int den) {
  std::uniform_real_distribution<double> radius(min_modulus, max_modulus);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  for (;;) {
    const double r = radius(rng);
    const double t = angle(rng);
    const long re = std::lround(r * std::cos(t) * den);
    const long im = std::lround(r * std::sin(t) * den);
    GaussianRational z(mpq_class(re, den), mpq_class(im, den));
    const double m = std::abs(z.to_complex());
    if (m >= min_modulus && m <= max_modulus) return z;
  }
}

std::vector<Polynomial> random_polynomial_system(std::mt19937_64& rng, int n, int max_degree) {
  if (n < 1 || max_degree < n) throw std::invalid_argument("need n >= 1 and max_degree >= n");
  std::vector<int> degrees(static_cast<std::size_t>(max_degree) + 1);
  std::iota(degrees.begin(), degrees.end(), 0);
  std::shuffle(degrees.begin(), degrees.end(), rng);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Polynomial> out;
  for (int j = 0; j <= n; ++j) {
    std::vector<GaussianRational> roots;
    for (int k = 0; k < degrees[static_cast<std::size_t>(j)]; ++k) {
      if (!roots.empty() && u(rng) < 0.2) {
        roots.push_back(roots[rng() % roots.size()]);
      } else if (u(rng) < 0.75) {
        roots.push_back(random_point(rng, 0, 0.9));
      } else {
        roots.push_back(random_point(rng, 1.2, 2.0));
      }
    }
    Polynomial p = Polynomial::constant(random_point(rng, 0.5, 2.0, 4));
    for (const auto& r : roots) p *= Polynomial({-r, 1});
    out.push_back(std::move(p));
  }
  return out;
}

BlaschkeProduct random_blaschke(std::mt19937_64& rng, int max_zeros, double max_modulus) {
  const int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_zeros));
  std::vector<BlaschkeZero> zs;
  int total = 0;
  while (total < count) {
    const int m = (count - total >= 2 && rng() % 4 == 0) ? 2 : 1;
    zs.push_back({random_point(rng, 0, max_modulus).to_complex(), m});
    total += m;
  }
  return blaschke_from_zeros(Domain::unit_disk(), zs);
}

std::vector<LemmaCase> lemma_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<LemmaCase> out;
  for (int i = 0; i < count; ++i) {
    LemmaCase c;
    if (i < count / 5) {
      c.f = Polynomial::constant(1);
    } else {
      const int deg = static_cast<int>(rng() % 5);
      std::vector<GaussianRational> coeffs;
      for (int k = 0; k <= deg; ++k) coeffs.push_back(random_point(rng, 0.1, 2.0, 4));
      c.f = Polynomial(std::move(coeffs));
    }
    c.theta = random_blaschke(rng, 5);
    out.push_back(std::move(c));
  }
  return out;
}

BlaschkeProduct radial_blaschke(int K) {
  std::vector<BlaschkeZero> zs;
  for (int k = 1; k <= K; ++k) zs.push_back({{1 - std::ldexp(1.0, -k), 0}, 1});
  return blaschke_from_zeros(Domain::unit_disk(), zs);
}

}  // namespace abca
