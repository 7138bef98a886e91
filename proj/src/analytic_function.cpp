#include "abca/analytic_function.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace abca {

std::vector<Complex> polynomial_jet(std::span<const Complex> c, Complex z, int k) {
  std::vector<Complex> out(static_cast<std::size_t>(k) + 1);
  std::vector<Complex> b(c.begin(), c.end());
  double fact = 1;
  for (int i = 0; i <= k && !b.empty(); ++i) {
    // Synthetic division by (x - z): remainder is the value, quotient carries on.
    std::vector<Complex> q(b.size() - 1);
    Complex acc = 0;
    for (std::size_t j = b.size(); j-- > 0;) {
      acc = acc * z + b[j];
      if (j > 0) q[j - 1] = acc;
    }
    out[static_cast<std::size_t>(i)] = acc * fact;
    fact *= i + 1;
    b = std::move(q);
  }
  return out;
}

std::vector<Complex> polynomial_recenter(std::span<const Complex> c, Complex center, Complex scale) {
  if (c.empty()) return {};
  const int deg = static_cast<int>(c.size()) - 1;
  std::vector<Complex> jet = polynomial_jet(c, center, deg);
  double fact = 1;
  Complex power = 1;
  for (int i = 0; i <= deg; ++i) {
    if (i > 0) fact *= i;
    jet[static_cast<std::size_t>(i)] *= power / fact;
    power *= scale;
  }
  return jet;
}

std::vector<Complex> polynomial_multiply(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

namespace {

std::vector<Complex> add_poly(std::vector<Complex> a, std::span<const Complex> b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

// Taylor coefficients of one Blaschke factor about w0, to order k.
std::vector<Complex> factor_taylor(Complex a, Normalization norm, Complex w0, int k) {
  std::vector<Complex> t(static_cast<std::size_t>(k) + 1);
  if (a == Complex(0, 0)) {
    t[0] = w0;
    if (k >= 1) t[1] = 1;
    return t;
  }
  const Complex ac = std::conj(a);
  const Complex d = 1.0 - ac * w0;
  const double s = 1.0 - std::norm(a);
  t[0] = (w0 - a) / d;
  Complex num = s;
  Complex den = d * d;
  for (int i = 1; i <= k; ++i) {
    t[static_cast<std::size_t>(i)] = num / den;
    num *= ac;
    den *= d;
  }
  if (norm == Normalization::kCanonical) {
    const Complex u = -ac / std::abs(a);
    for (auto& x : t) x *= u;
  }
  return t;
}

std::vector<Complex> truncated_product(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

AnalyticFunction::AnalyticFunction(Polynomial p) {
  auto c = p.to_complex();
  data_ = PolyData{std::move(p), std::move(c)};
}

AnalyticFunction AnalyticFunction::from_series(PowerSeries s, Evaluator exact) {
  AnalyticFunction f;
  f.data_ = SeriesData{std::move(s), std::move(exact)};
  return f;
}

AnalyticFunction AnalyticFunction::from_blaschke(BlaschkeProduct b, Complex scale) {
  if (!(b.domain() == Domain::unit_disk()))
    throw std::invalid_argument("Blaschke terms must live on the unit disk");
  AnalyticFunction f;
  f.data_ = BlaschkeData{std::move(b), scale};
  return f;
}

AnalyticFunction AnalyticFunction::sum(std::span<const AnalyticFunction> terms) {
  if (terms.empty()) return AnalyticFunction();
  const bool all_poly = std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.is_polynomial(); });
  if (all_poly) {
    Polynomial p;
    for (const auto& t : terms) p += t.polynomial();
    return AnalyticFunction(std::move(p));
  }
  int order = -1;
  bool series_like = true;
  bool any_exact = false;
  for (const auto& t : terms) {
    if (const auto* s = std::get_if<SeriesData>(&t.data_)) {
      order = order < 0 ? s->s.order() : std::min(order, s->s.order());
      any_exact = any_exact || static_cast<bool>(s->exact);
    } else if (!t.is_polynomial()) {
      series_like = false;
    }
  }
  if (series_like) {
    for (const auto& t : terms)
      if (t.is_polynomial() && t.polynomial().degree() > order) series_like = false;
  }
  if (series_like) {
    PowerSeries acc(order);
    for (const auto& t : terms) acc += t.taylor(order);
    Evaluator exact;
    if (any_exact) {
      auto copy = std::make_shared<const std::vector<AnalyticFunction>>(terms.begin(), terms.end());
      exact = [copy](Complex z) {
        Complex v = 0;
        for (const auto& t : *copy) v += t(z);
        return v;
      };
    }
    return from_series(std::move(acc), std::move(exact));
  }
  std::vector<AnalyticFunction> flat;
  for (const auto& t : terms) {
    if (const auto* s = std::get_if<SumData>(&t.data_))
      flat.insert(flat.end(), s->terms->begin(), s->terms->end());
    else
      flat.push_back(t);
  }
  AnalyticFunction f;
  f.data_ = SumData{std::make_shared<const std::vector<AnalyticFunction>>(std::move(flat))};
  return f;
}

AnalyticFunction::Kind AnalyticFunction::kind() const {
  return static_cast<Kind>(data_.index());
}

const Polynomial& AnalyticFunction::polynomial() const {
  const auto* p = std::get_if<PolyData>(&data_);
  if (!p) throw std::logic_error("not a polynomial");
  return p->exact;
}

const BlaschkeProduct* AnalyticFunction::blaschke() const {
  const auto* b = std::get_if<BlaschkeData>(&data_);
  return b ? &b->b : nullptr;
}

Complex AnalyticFunction::blaschke_scale() const {
  const auto* b = std::get_if<BlaschkeData>(&data_);
  return b ? b->scale : Complex(0, 0);
}

bool AnalyticFunction::identically_zero() const {
  switch (kind()) {
    case Kind::kPolynomial:
      return std::get<PolyData>(data_).exact.is_zero();
    case Kind::kSeries:
      return std::get<SeriesData>(data_).s.is_zero();
    case Kind::kBlaschke:
      return std::get<BlaschkeData>(data_).scale == Complex(0, 0);
    case Kind::kSum: {
      const auto num = rational_form().first;
      return std::all_of(num.begin(), num.end(), [](Complex c) { return c == Complex(0, 0); });
    }
  }
  return false;
}

Complex AnalyticFunction::operator()(Complex z) const {
  switch (kind()) {
    case Kind::kPolynomial: {
      const auto& c = std::get<PolyData>(data_).c;
      Complex acc = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
      return acc;
    }
    case Kind::kSeries: {
      const auto& s = std::get<SeriesData>(data_);
      return s.exact ? s.exact(z) : s.s.evaluate(z);
    }
    case Kind::kBlaschke: {
      const auto& b = std::get<BlaschkeData>(data_);
      return b.scale * b.b.eval_unit(z);
    }
    case Kind::kSum: {
      Complex v = 0;
      for (const auto& t : *std::get<SumData>(data_).terms) v += t(z);
      return v;
    }
  }
  return 0;
}

std::vector<Complex> AnalyticFunction::jet(Complex z, int k) const {
  switch (kind()) {
    case Kind::kPolynomial:
      return polynomial_jet(std::get<PolyData>(data_).c, z, k);
    case Kind::kSeries: {
      const auto& s = std::get<SeriesData>(data_);
      auto j = polynomial_jet(s.s.coeffs(), z, k);
      if (s.exact) j[0] = s.exact(z);
      return j;
    }
    case Kind::kBlaschke: {
      const auto& b = std::get<BlaschkeData>(data_);
      std::vector<Complex> t(static_cast<std::size_t>(k) + 1);
      t[0] = 1;
      for (const auto& zero : b.b.unit_zeros()) {
        const auto f = factor_taylor(zero.location, b.b.normalization(), z, k);
        for (int m = 0; m < zero.multiplicity; ++m) t = truncated_product(t, f);
      }
      double fact = 1;
      for (int i = 0; i <= k; ++i) {
        if (i > 0) fact *= i;
        t[static_cast<std::size_t>(i)] *= b.scale * fact;
      }
      return t;
    }
    case Kind::kSum: {
      std::vector<Complex> out(static_cast<std::size_t>(k) + 1);
      for (const auto& t : *std::get<SumData>(data_).terms) {
        const auto j = t.jet(z, k);
        for (int i = 0; i <= k; ++i) out[static_cast<std::size_t>(i)] += j[static_cast<std::size_t>(i)];
      }
      return out;
    }
  }
  return {};
}

PowerSeries AnalyticFunction::taylor(int order) const {
  switch (kind()) {
    case Kind::kPolynomial: {
      const auto& c = std::get<PolyData>(data_).c;
      return PowerSeries(c, order);
    }
    case Kind::kSeries: {
      const auto& d = std::get<SeriesData>(data_);
      if (d.exact) return d.s.truncated(order);
      // Without an exact function the series is its coefficient polynomial.
      return PowerSeries(std::vector<Complex>(d.s.coeffs().begin(), d.s.coeffs().end()), order);
    }
    case Kind::kBlaschke: {
      const auto& b = std::get<BlaschkeData>(data_);
      return taylor_coefficients(b.b, order).series * b.scale;
    }
    case Kind::kSum: {
      PowerSeries acc(order);
      for (const auto& t : *std::get<SumData>(data_).terms) acc += t.taylor(order);
      return acc;
    }
  }
  return PowerSeries(order);
}

std::pair<std::vector<Complex>, std::vector<Complex>> AnalyticFunction::rational_form() const {
  switch (kind()) {
    case Kind::kPolynomial:
      return {std::get<PolyData>(data_).c, {1.0}};
    case Kind::kSeries: {
      const auto c = std::get<SeriesData>(data_).s.coeffs();
      return {std::vector<Complex>(c.begin(), c.end()), {1.0}};
    }
    case Kind::kBlaschke: {
      const auto& b = std::get<BlaschkeData>(data_);
      auto num = b.b.numerator_unit();
      for (auto& x : num) x *= b.scale;
      return {std::move(num), b.b.denominator_unit()};
    }
    case Kind::kSum: {
      std::vector<Complex> num;
      std::vector<Complex> den{1.0};
      for (const auto& t : *std::get<SumData>(data_).terms) {
        auto [tn, td] = t.rational_form();
        num = add_poly(polynomial_multiply(num, td), polynomial_multiply(tn, den));
        den = polynomial_multiply(den, td);
      }
      while (!num.empty() && num.back() == Complex(0, 0)) num.pop_back();
      return {std::move(num), std::move(den)};
    }
  }
  return {};
}

std::string AnalyticFunction::describe() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::kPolynomial:
      os << "polynomial " << std::get<PolyData>(data_).exact;
      break;
    case Kind::kSeries:
      os << "series of order " << std::get<SeriesData>(data_).s.order();
      break;
    case Kind::kBlaschke:
      os << "Blaschke product with " << std::get<BlaschkeData>(data_).b.count() << " zeros";
      break;
    case Kind::kSum:
      os << "sum of " << std::get<SumData>(data_).terms->size() << " terms";
      break;
  }
  return os.str();
}

}  // namespace abca
