#pragma once

#include <complex>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abca/gaussian_rational.hpp"

namespace abca {

// Univariate polynomial over Q(i), coefficients indexed by power.
// Trailing zero coefficients are always stripped, so the zero polynomial
// has an empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coeffs);
  Polynomial(std::initializer_list<GaussianRational> coeffs);

  static Polynomial constant(GaussianRational c) { return Polynomial({std::move(c)}); }
  static Polynomial monomial(GaussianRational c, int power);
  static Polynomial z() { return monomial(1, 1); }

  // Demo sugar: "z^2-1", "3z^4+1/2z-i", "(1/2+i)z^3". Coefficients are
  // Gaussian rationals; no nested expressions.
  static Polynomial parse_sugar(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  GaussianRational coeff(int k) const;
  const GaussianRational& leading() const;

  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial pow(int e) const;
  GaussianRational evaluate(const GaussianRational& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;
  std::vector<std::complex<double>> to_complex() const;

  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// Euclidean division over the field Q(i): a = q*b + r, deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Exact quotient; throws std::domain_error when b does not divide a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

// Monic gcd via the subresultant remainder sequence. gcd(p, 0) = monic(p).
// Throws std::invalid_argument("undefined gcd") when both are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

// p / gcd(p, p'), monic. Its degree is the number of distinct complex zeros.
Polynomial squarefree_part(const Polynomial& p);

std::size_t distinct_zero_count(const Polynomial& p);

struct SquarefreeFactor {
  Polynomial factor;  // monic, squarefree, nonconstant
  int multiplicity;
};

// Yun's algorithm: p = lc(p) * prod factor^multiplicity, factors pairwise coprime.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

}  // namespace abca
