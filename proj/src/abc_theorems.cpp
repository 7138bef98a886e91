#include "abca/abc_theorems.hpp"

#include <algorithm>
#include <string>

#include "abca/errors.hpp"
#include "abca/wronskian.hpp"

namespace abca {

IntegerInequality mason_check(const Polynomial& a, const Polynomial& b) {
  const Polynomial c = a + b;
  if (a.is_constant() && b.is_constant() && c.is_constant())
    throw HypothesisViolation("trivial input: a, b and c = a + b are all constant");
  if (poly_gcd(a, b).degree() > 0) throw HypothesisViolation("not relatively prime");

  IntegerInequality r;
  r.lhs = std::max({a.degree(), b.degree(), c.degree()});
  // a, b, c are pairwise coprime, so distinct zeros of abc add up.
  r.rhs = 0;
  for (const Polynomial* p : {&a, &b, &c})
    if (!p->is_zero()) r.rhs += static_cast<long>(distinct_zero_count(*p));
  r.holds = r.lhs < r.rhs;
  return r;
}

IntegerInequality n_theorem_check(std::span<const Polynomial> ps) {
  if (ps.size() < 2) throw std::invalid_argument("the n-theorem needs at least two polynomials");
  const long n = static_cast<long>(ps.size()) - 1;

  if (wronskian_poly(ps).is_zero())
    throw HypothesisViolation("linearly dependent: the Wronskian vanishes identically");

  std::vector<Polynomial> all(ps.begin(), ps.end());
  Polynomial sum;
  for (const auto& p : ps) sum += p;
  all.push_back(sum);

  for (std::size_t j = 0; j < all.size(); ++j)
    for (std::size_t k = j + 1; k < all.size(); ++k)
      if (poly_gcd(all[j], all[k]).degree() > 0)
        throw HypothesisViolation("zero sets not pairwise disjoint: p_" + std::to_string(j) +
                                  " and p_" + std::to_string(k) + " share a zero");

  // Disjoint zero sets: distinct zeros of the product add up.
  long max_degree = 0, distinct = 0;
  for (const auto& p : all) {
    max_degree = std::max<long>(max_degree, p.degree());
    if (!p.is_zero()) distinct += static_cast<long>(distinct_zero_count(p));
  }
  IntegerInequality r;
  r.lhs = max_degree;
  r.rhs = n * distinct - n * (n + 1) / 2;
  r.holds = r.lhs <= r.rhs;
  return r;
}

}  // namespace abca
