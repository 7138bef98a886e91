#include "abca/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace abca {

namespace {

GaussianRational power(GaussianRational base, int e) {
  GaussianRational result = 1;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

// Splits at top-level '+'/'-' (outside parentheses), keeping the sign
// with the following term.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced parentheses in '" + s + "'");
    if ((c == '+' || c == '-') && depth == 0 && k > start) {
      char prev = s[k - 1];
      if (prev != 'e' && prev != 'E' && prev != '^' && prev != '+' && prev != '-') {
        terms.push_back(s.substr(start, k - start));
        start = k;
      }
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + s + "'");
  terms.push_back(s.substr(start));
  return terms;
}

GaussianRational parse_coefficient(std::string text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.erase(0, 1);
  }
  if (!text.empty() && text.back() == '*') text.pop_back();
  GaussianRational c = 1;
  if (!text.empty()) {
    if (text.front() == '(') {
      if (text.back() != ')') throw std::invalid_argument("bad coefficient '" + text + "'");
      c = GaussianRational::parse(text.substr(1, text.size() - 2));
    } else {
      c = GaussianRational::parse(text);
    }
  }
  return negative ? -c : c;
}

}  // namespace

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<GaussianRational> coeffs) : coeffs_(coeffs) {
  trim();
}

Polynomial Polynomial::monomial(GaussianRational c, int power) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  std::vector<GaussianRational> v(static_cast<std::size_t>(power) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::parse_sugar(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty polynomial expression");
  Polynomial result;
  for (const auto& term : split_terms(s)) {
    if (term == "+" || term == "-" || term.empty())
      throw std::invalid_argument("dangling sign in '" + s + "'");
    auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      result += constant(parse_coefficient(term));
      continue;
    }
    GaussianRational c = parse_coefficient(term.substr(0, zpos));
    std::string rest = term.substr(zpos + 1);
    int power = 1;
    if (!rest.empty()) {
      if (rest.front() != '^' || rest.size() < 2)
        throw std::invalid_argument("bad exponent in term '" + term + "'");
      for (std::size_t k = 1; k < rest.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(rest[k])))
          throw std::invalid_argument("bad exponent in term '" + term + "'");
      power = std::stoi(rest.substr(1));
    }
    result += monomial(c, power);
  }
  return result;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const GaussianRational& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  GaussianRational inv = GaussianRational(1) / leading();
  return *this * inv;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial result = constant(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

GaussianRational Polynomial::evaluate(const GaussianRational& x) const {
  GaussianRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

std::vector<std::complex<double>> Polynomial::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_complex());
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<GaussianRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<GaussianRational> r = a.coeffs();
  std::vector<GaussianRational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const GaussianRational inv_lead = GaussianRational(1) / b.leading();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const GaussianRational& top = r[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    GaussianRational factor = top * inv_lead;
    const int shift = k - db;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(shift + j)] -= factor * bc[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(shift)] = std::move(factor);
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  const GaussianRational& lead = b.leading();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<GaussianRational> r = a.coeffs();
  int e = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    const GaussianRational top = r[static_cast<std::size_t>(k)];
    r[static_cast<std::size_t>(k)] = 0;
    if (top.is_zero()) continue;
    for (int j = 0; j < k; ++j) r[static_cast<std::size_t>(j)] *= lead;
    const int shift = k - db;
    for (int j = 0; j < db; ++j)
      r[static_cast<std::size_t>(shift + j)] -= top * bc[static_cast<std::size_t>(j)];
    --e;
  }
  return Polynomial(std::move(r)) * power(lead, e);
}

namespace {

// Scales p by a nonzero rational so that all coefficients lie in Z[i] with
// coprime integer parts. Does not change the zero set.
Polynomial integral_primitive(const Polynomial& p) {
  mpz_class den = 1, content = 0;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den_mpz_t());
  }
  for (const auto& c : p.coeffs()) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), mpz_class(c.re() * den).get_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), mpz_class(c.im() * den).get_mpz_t());
  }
  return p * GaussianRational(mpq_class(den, content));
}

}  // namespace

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("undefined gcd");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  Polynomial a = integral_primitive(p), b = integral_primitive(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  GaussianRational g = 1, h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    Polynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) return b.monic();
    if (r.degree() == 0) return Polynomial::constant(1);
    a = std::move(b);
    b = r * (GaussianRational(1) / (g * power(h, delta)));
    g = a.leading();
    // h <- g^delta / h^(delta - 1)
    if (delta > 0) h = power(g, delta) / power(h, delta - 1);
  }
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  return exact_quotient(p, poly_gcd(p, p.derivative())).monic();
}

std::size_t distinct_zero_count(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("distinct zero count of the zero polynomial");
  return static_cast<std::size_t>(squarefree_part(p).degree());
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;
  Polynomial f = p.monic();
  Polynomial fp = f.derivative();
  Polynomial a0 = poly_gcd(f, fp);
  Polynomial b = exact_quotient(f, a0);
  Polynomial c = exact_quotient(fp, a0);
  Polynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Polynomial a = poly_gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace abca
