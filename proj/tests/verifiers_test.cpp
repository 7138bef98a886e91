#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "abca/corpus.hpp"
#include "abca/errors.hpp"
#include "abca/roots.hpp"
#include "abca/verifiers.hpp"
#include "abca/wronskian.hpp"
#include "test_support.hpp"

using namespace abca;

namespace {

const QuadratureSpec kSpec{};

Polynomial P(const char* s) { return Polynomial::parse_sugar(s); }

std::vector<AnalyticFunction> polys(std::initializer_list<const char*> ss) {
  std::vector<AnalyticFunction> out;
  for (const char* s : ss) out.emplace_back(P(s));
  return out;
}

BlaschkeProduct unit_blaschke(std::vector<BlaschkeZero> zs) {
  return blaschke_from_zeros(Domain::unit_disk(), zs);
}

// Counts roots strictly inside the unit disk, from the raw root finder.
int inside_count(const Polynomial& p) {
  if (p.degree() < 1) return 0;
  int n = 0;
  for (auto r : poly_roots(p.to_complex())) n += std::abs(r) < 1;
  return n;
}

}  // namespace

TEST(AnalyticFunction, PolynomialJetMatchesExactDerivatives) {
  const Polynomial p = P("3z^4-2z^2+(1/2+i)z-5");
  const AnalyticFunction f(p);
  const Complex z(0.3, -0.7);
  const auto j = f.jet(z, 5);
  Polynomial d = p;
  for (int k = 0; k <= 5; ++k) {
    EXPECT_LT(std::abs(j[static_cast<std::size_t>(k)] - d.evaluate(z)), 1e-12) << k;
    d = d.derivative();
  }
}

TEST(AnalyticFunction, BlaschkeJetMatchesTaylorAndDerivative) {
  const auto b = unit_blaschke({{{0.4, 0.2}, 2}, {{-0.5, 0}, 1}, {{0, 0}, 1}});
  const auto f = AnalyticFunction::from_blaschke(b, 0.5);
  const auto at0 = f.jet(0, 3);
  const auto t = taylor_coefficients(b, 8).series;
  EXPECT_LT(std::abs(at0[0] - 0.5 * t.coeff(0)), 1e-14);
  EXPECT_LT(std::abs(at0[1] - 0.5 * t.coeff(1)), 1e-14);
  EXPECT_LT(std::abs(at0[2] - 0.5 * 2.0 * t.coeff(2)), 1e-13);
  EXPECT_LT(std::abs(at0[3] - 0.5 * 6.0 * t.coeff(3)), 1e-13);
  const Complex z(0.1, 0.6);
  const auto j = f.jet(z, 1);
  EXPECT_LT(std::abs(j[0] - 0.5 * b.eval_unit(z)), 1e-14);
  EXPECT_LT(std::abs(j[1] - 0.5 * b.derivative_unit(z)), 1e-12);
}

TEST(AnalyticFunction, SumPicksSimplestKind) {
  std::vector<AnalyticFunction> ps = polys({"1", "z^2"});
  EXPECT_EQ(AnalyticFunction::sum(ps).kind(), AnalyticFunction::Kind::kPolynomial);
  EXPECT_EQ(AnalyticFunction::sum(ps).polynomial(), P("z^2+1"));
  ps.push_back(AnalyticFunction::from_series(PowerSeries({1.0, 1.0, 0.5}, 10)));
  EXPECT_EQ(AnalyticFunction::sum(ps).kind(), AnalyticFunction::Kind::kSeries);
  ps.push_back(AnalyticFunction::from_blaschke(unit_blaschke({{{0.5, 0}, 1}})));
  const auto s = AnalyticFunction::sum(ps);
  EXPECT_EQ(s.kind(), AnalyticFunction::Kind::kSum);
  const Complex z(0.2, 0.3);
  const Complex expect = 1.0 + z * z + (1.0 + z + 0.5 * z * z) + (0.5 - z) / (1.0 - 0.5 * z);
  EXPECT_LT(std::abs(s(z) - expect), 1e-14);
  const auto [num, den] = s.rational_form();
  Complex nv = 0, dv = 0;
  for (std::size_t k = num.size(); k-- > 0;) nv = nv * z + num[k];
  for (std::size_t k = den.size(); k-- > 0;) dv = dv * z + den[k];
  EXPECT_LT(std::abs(nv / dv - expect), 1e-13);
}

TEST(BuildSystem, ExampleOneObjects) {
  ExampleParams p = default_example_params(1);
  const auto sys = example_system(1, p, kSpec);
  ASSERT_EQ(sys.functions.size(), 4u);
  EXPECT_TRUE(sys.blaschke[0].empty());
  EXPECT_TRUE(sys.blaschke[3].empty());
  EXPECT_EQ(blaschke_counts(sys.blaschke[1]).total, 1);
  EXPECT_EQ(blaschke_counts(sys.blaschke[2]).total, 2);
  ASSERT_EQ(sys.bigB.unit_zeros().size(), 1u);
  EXPECT_EQ(sys.bigB.unit_zeros()[0].location, Complex(0, 0));
  EXPECT_EQ(sys.bigB.unit_zeros()[0].multiplicity, 2);
  EXPECT_EQ(blaschke_counts(sys.calB).total, 1);
  ASSERT_TRUE(sys.w_exact);
  EXPECT_EQ(*sys.w_exact, Polynomial::constant(GaussianRational(mpq_class(1, 100))));
  EXPECT_EQ(sys.functions[3].polynomial(), P("1+1/10z+1/20z^2"));
}

TEST(BuildSystem, ExampleTwoObjects) {
  const auto sys = example_system(2, default_example_params(2), kSpec);
  EXPECT_EQ(blaschke_counts(sys.bigB).total, 5);
  EXPECT_EQ(blaschke_counts(sys.calB).total, 1);
  ASSERT_TRUE(sys.w_exact);
  EXPECT_EQ(sys.w_exact->degree(), 3);
  for (int k = 0; k < 3; ++k) EXPECT_TRUE(sys.w_exact->coeff(k).is_zero());
}

TEST(BuildSystem, BoundaryZeroOfTheSumIsRejected) {
  EXPECT_THROW(build_system(polys({"1", "z-2"}), Domain::unit_disk(), kSpec), HypothesisViolation);
}

TEST(BuildSystem, DependentFunctionsAreRejected) {
  EXPECT_THROW(build_system(polys({"z+3", "2z+6"}), Domain::unit_disk(), kSpec), HypothesisViolation);
}

TEST(BuildSystem, VanishingFunctionHasInfinitelyManyZeros) {
  try {
    build_system(polys({"1", "0"}), Domain::unit_disk(), kSpec);
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_NE(std::string(e.what()).find("infinitely many zeros"), std::string::npos);
  }
}

TEST(BuildSystem, NonPolynomialNeedsUnitDisk) {
  std::vector<AnalyticFunction> fs = polys({"1"});
  fs.push_back(AnalyticFunction::from_series(PowerSeries({0.0, 0.1}, 5)));
  EXPECT_THROW(build_system(fs, Domain({0, 0}, 2), kSpec), std::invalid_argument);
}

TEST(BuildSystem, ColumnReplacementLeavesWronskianUnchanged) {
  std::mt19937_64 rng(abca::testing::test_seed());
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> ps;
    for (int j = 0; j < 3; ++j) ps.push_back(abca::testing::random_poly(rng, 2 + j, 6));
    const Polynomial w = wronskian_poly(ps);
    const Polynomial sum = ps[0] + ps[1] + ps[2];
    for (int j = 0; j < 3; ++j) {
      auto q = ps;
      q[static_cast<std::size_t>(j)] = sum;
      EXPECT_EQ(wronskian_poly(q), w);
    }
  }
}

TEST(Divisibility, ExampleOneQuotientIsEpsSquared) {
  const auto sys = example_system(1, default_example_params(1), kSpec);
  const auto d = check_divisibility(sys, kSpec);
  EXPECT_TRUE(d.ok);
  EXPECT_TRUE(d.exact);
  for (Complex z : {Complex(0, 0), Complex(0.3, 0.4), Complex(-0.9, 0.1)})
    EXPECT_LT(std::abs(d.F(z) - 0.01), 1e-15);
  EXPECT_LE(d.modulus_gap, 1e-8);
}

TEST(Divisibility, ExampleTwoQuotientIsTheLeadingConstant) {
  const auto sys = example_system(2, default_example_params(2), kSpec);
  const auto d = check_divisibility(sys, kSpec);
  const Complex c = sys.w_exact->leading().to_complex();
  for (Complex z : {Complex(0, 0), Complex(0.5, 0.1), Complex(0, -0.99)})
    EXPECT_LT(std::abs(d.F(z) - c), 1e-15 * std::abs(c) + 1e-18);
}

TEST(Divisibility, QuarterQuotient) {
  const auto sys = build_system(polys({"1", "1/8z^2"}), Domain::unit_disk(), kSpec);
  EXPECT_EQ(*sys.w_exact, P("1/4z"));
  EXPECT_EQ(blaschke_counts(sys.bigB).total, 2);
  EXPECT_EQ(blaschke_counts(sys.calB).total, 1);
  const auto d = check_divisibility(sys, kSpec);
  EXPECT_LT(std::abs(d.F(Complex(0.2, 0.7)) - 0.25), 1e-15);
}

TEST(Divisibility, SeriesPathWithDoubleZero) {
  std::vector<AnalyticFunction> fs = polys({"1"});
  fs.push_back(AnalyticFunction::from_blaschke(unit_blaschke({{{0.3, 0.2}, 2}, {{-0.6, 0}, 1}}), 0.5));
  const auto sys = build_system(fs, Domain::unit_disk(), kSpec);
  EXPECT_FALSE(sys.polynomial_path);
  EXPECT_EQ(blaschke_counts(sys.bigB).total, 3);
  const auto d = check_divisibility(sys, kSpec);
  EXPECT_FALSE(d.exact);
  EXPECT_LE(d.max_remainder, 1e-8);
  EXPECT_LE(d.modulus_gap, 1e-8);
}

TEST(Divisibility, RandomPolynomialSystemsOnAShiftedDisk) {
  std::mt19937_64 rng(abca::testing::test_seed() + 7);
  const Domain d({0.5, -0.25}, 1.5);
  int built = 0;
  for (int trial = 0; trial < 40 && built < 15; ++trial) {
    std::vector<AnalyticFunction> fs;
    for (int j = 0; j < 3; ++j) {
      std::vector<GaussianRational> roots;
      const int deg = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < deg; ++k) roots.push_back(abca::testing::random_gaussian(rng, 4));
      if (j == 1) roots.push_back(roots.front());
      fs.emplace_back(abca::testing::from_roots(roots) * abca::testing::random_gaussian(rng, 5));
    }
    try {
      const auto sys = build_system(fs, d, kSpec);
      ++built;
      const auto div = check_divisibility(sys, kSpec);
      EXPECT_TRUE(div.ok);
      EXPECT_LE(div.modulus_gap, 1e-8);
    } catch (const HypothesisViolation&) {
    }
  }
  EXPECT_GE(built, 10);
}

TEST(Theorems, ExamplesAreEqualities) {
  for (int n = 1; n <= 3; ++n) {
    ExampleParams p = default_example_params(1);
    p.n = n;
    const auto run = run_example(1, p, kSpec);
    EXPECT_EQ(run.theorem1.status, Status::kEquality);
    EXPECT_EQ(run.theorem1.lhs, n);
    EXPECT_NEAR(run.theorem1.functionals->lambda_sq, 0, 1e-9);
    EXPECT_NEAR(run.theorem2.functionals->kappa, 0, 1e-9);
    EXPECT_NEAR(run.theorem1.functionals->mu, 1, 1e-9);
  }
  const auto run = run_example(2, default_example_params(2), kSpec);
  EXPECT_EQ(run.theorem1.lhs, 5);
  EXPECT_NEAR(run.theorem1.functionals->lambda_sq, 3, 1e-6);
  EXPECT_NEAR(run.theorem2.functionals->kappa, 3, 1e-6);
  EXPECT_NEAR(run.theorem1.functionals->mu, 1, 1e-9);
  EXPECT_LE(std::abs(run.theorem1.slack), 1e-6);
  EXPECT_LE(std::abs(run.theorem2.slack), 1e-6);
}

TEST(Theorems, ExampleParameterRanges) {
  ExampleParams p = default_example_params(1);
  p.eps = mpq_class(1, 2);
  try {
    run_example(1, p, kSpec);
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_NE(std::string(e.what()).find("ε must satisfy ε<e^{−Δ}"), std::string::npos);
  }
  ExampleParams q = default_example_params(2);
  q.m = 2;
  EXPECT_THROW(run_example(2, q, kSpec), HypothesisViolation);
  q = default_example_params(2);
  q.eps = mpq_class(2, 5);
  EXPECT_THROW(run_example(2, q, kSpec), HypothesisViolation);
  // Example 1 on a larger disk needs a smaller epsilon.
  p = default_example_params(1);
  p.domain = Domain({0, 0}, 2);
  EXPECT_THROW(run_example(1, p, kSpec), HypothesisViolation);
  p.eps = mpq_class(1, 100);
  EXPECT_EQ(run_example(1, p, kSpec).theorem2.status, Status::kEquality);
}

TEST(Theorems, PerturbedExampleTwoHolds) {
  std::mt19937_64 rng(abca::testing::test_seed() + 11);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<GaussianRational> roots;
    for (int k = 0; k < 5; ++k) {
      GaussianRational r = abca::testing::random_gaussian(rng, 10);
      r *= GaussianRational(mpq_class(1, 4));
      roots.push_back(r);
    }
    std::vector<AnalyticFunction> fs = polys({"1", "1/4z"});
    fs.emplace_back(abca::testing::from_roots(roots) * GaussianRational(mpq_class(1, 480)));
    const auto sys = build_system(fs, Domain::unit_disk(), kSpec);
    const auto t1 = verify_theorem1(sys, kSpec);
    const auto t2 = verify_theorem2(sys, kSpec);
    EXPECT_EQ(t1.status, Status::kHolds) << t1.slack;
    EXPECT_EQ(t2.status, Status::kHolds) << t2.slack;
    EXPECT_GT(t1.slack, 0);
  }
}

TEST(Theorems, DisjointZeroSetsDecompose) {
  const std::vector<AnalyticFunction> fs = polys({"z^2-1/4", "(1/3+i)z^3"});
  const auto sys = build_system(fs, Domain::unit_disk(), kSpec);
  const Polynomial sum = P("(1/3+i)z^3+z^2-1/4");
  int total = 0, distinct = 0;
  for (const Polynomial& p : {P("z^2-1/4"), P("z^3"), sum}) {
    total += inside_count(p);
    distinct += inside_count(squarefree_part(p));
  }
  const auto r = verify_theorem2(sys, kSpec);
  EXPECT_EQ(r.lhs, total);
  EXPECT_EQ(*r.n_calB, distinct);
  EXPECT_NE(r.status, Status::kFails);
  const auto& f = *r.functionals;
  EXPECT_NEAR(r.rhs, f.kappa + f.mu * distinct, 1e-12);
}

TEST(Theorems, RandomCorpusNeverFails) {
  std::mt19937_64 rng(abca::testing::test_seed() + 3);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    std::vector<AnalyticFunction> fs;
    for (auto& p : random_polynomial_system(rng, n)) fs.emplace_back(std::move(p));
    try {
      const auto sys = build_system(fs, Domain::unit_disk(), kSpec);
      EXPECT_NE(verify_theorem1(sys, kSpec).status, Status::kFails);
      EXPECT_NE(verify_theorem2(sys, kSpec).status, Status::kFails);
      EXPECT_TRUE(check_divisibility(sys, kSpec).ok);
      ++checked;
    } catch (const HypothesisViolation&) {
    }
  }
  EXPECT_GE(checked, 25);
}

TEST(Prop3, ExampleTwoAndTruncatedSeries) {
  const auto sys = example_system(2, default_example_params(2), kSpec);
  const auto a = verify_prop3(sys, kSpec, Prop3Variant::kA);
  const auto b = verify_prop3(sys, kSpec, Prop3Variant::kB);
  EXPECT_EQ(a.status, Status::kEquality);
  EXPECT_EQ(b.status, Status::kEquality);
  EXPECT_EQ(a.theorem, "prop3a");

  // f_j = eps z^j e^z / j!, truncated at degree 40, with the exact function attached.
  const double eps = 0.1;
  std::vector<AnalyticFunction> fs = polys({"1"});
  for (int j = 1; j <= 2; ++j) {
    std::vector<Complex> c(41);
    double fact = j == 1 ? 1 : 2;
    for (int k = 0; j + k <= 40; ++k) {
      c[static_cast<std::size_t>(j + k)] = eps / fact;
      fact *= k + 1;
    }
    const double jf = j == 1 ? 1 : 2;
    fs.push_back(AnalyticFunction::from_series(PowerSeries(c, 40), [=](Complex z) {
      return eps * std::pow(z, j) * std::exp(z) / jf;
    }));
  }
  const auto s = build_system(fs, Domain::unit_disk(), kSpec);
  EXPECT_EQ(blaschke_counts(s.bigB).total, 2);
  const auto ra = verify_prop3(s, kSpec, Prop3Variant::kA);
  const auto rb = verify_prop3(s, kSpec, Prop3Variant::kB);
  EXPECT_NE(ra.status, Status::kFails);
  EXPECT_NE(rb.status, Status::kFails);
  EXPECT_GE(ra.slack, -1e-6);
}

TEST(Prop3, RequiresUnitDisk) {
  ExampleParams p = default_example_params(1);
  p.domain = Domain({0, 0}, 0.5);
  const auto sys = example_system(1, p, kSpec);
  EXPECT_THROW(verify_prop3(sys, kSpec, Prop3Variant::kA), HypothesisViolation);
}

TEST(Theorem4, ExampleTwoMatchesHandComputation) {
  const auto sys = example_system(2, default_example_params(2), kSpec);
  for (double alpha : {0.25, 0.5, 0.75}) {
    const auto r = verify_theorem4(sys, alpha, kSpec);
    const double expect = (std::pow(3, alpha) + 2) / std::pow(5, alpha);
    EXPECT_NEAR(*r.value("implied_c"), expect, 1e-9);
    EXPECT_NEAR(*r.value("implied_c_doubled"), expect, 1e-9);
    EXPECT_NEAR(*r.value("lambda_alpha_sq"), std::pow(3, alpha), 1e-9);
    EXPECT_EQ(r.status, Status::kHolds);
  }
  EXPECT_THROW(verify_theorem4(sys, 1.0, kSpec), std::invalid_argument);
}

TEST(Theorem4, SingleZeroSystem) {
  const auto sys = build_system(polys({"1", "1/4z"}), Domain::unit_disk(), kSpec);
  const auto r = verify_theorem4(sys, 0.5, kSpec);
  EXPECT_NEAR(*r.value("implied_c"), 1.0, 1e-9);
}

TEST(Theorem4, RadialFamily) {
  double prev = 0;
  for (int K : {5, 10, 15}) {
    std::vector<AnalyticFunction> fs = polys({"1"});
    fs.push_back(AnalyticFunction::from_blaschke(radial_blaschke(K), 0.5));
    const auto sys = build_system(fs, Domain::unit_disk(), kSpec);
    EXPECT_EQ(blaschke_counts(sys.bigB).total, K);
    const auto r = verify_theorem4(sys, 0.5, kSpec);
    const double c = *r.value("implied_c");
    const double c2 = *r.value("implied_c_doubled");
    EXPECT_TRUE(std::isfinite(c));
    EXPECT_GT(c, 0);
    EXPECT_LT(std::abs(c2 / c - 1), 1e-6);
    // W = B'/2 grows as the zeros approach the circle.
    EXPECT_GT(c, prev);
    prev = c;
  }
}

TEST(Lemmas, CarlesonFormula) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = verify_carleson_formula(Polynomial{1}, unit_blaschke({{{0, 0}, n}}), kSpec);
    EXPECT_NEAR(r.lhs, n, 1e-9);
    EXPECT_EQ(r.status, Status::kEquality);
  }
  const auto zz = verify_carleson_formula(P("z"), unit_blaschke({{{0, 0}, 1}}), kSpec);
  EXPECT_NEAR(zz.lhs, 2, 1e-9);
  EXPECT_NEAR(zz.rhs, 2, 1e-9);
  const auto half = verify_carleson_formula(P("1+z"), unit_blaschke({{{0.5, 0}, 1}}), kSpec);
  EXPECT_EQ(half.status, Status::kEquality);
  EXPECT_LE(std::abs(half.slack), 1e-6);
  // A shifted disk: the Dirichlet integral is conformally invariant.
  const Domain d({1, 1}, 2);
  const auto shifted = verify_carleson_formula(Polynomial{1}, blaschke_from_zeros(d, std::vector<BlaschkeZero>{{{1.5, 1}, 2}}), kSpec);
  EXPECT_NEAR(shifted.lhs, 2, 1e-9);
}

TEST(Lemmas, VinogradovShirokov) {
  const auto eq = verify_vs_inequality(Polynomial{1}, unit_blaschke({{{0, 0}, 3}}), kSpec);
  EXPECT_NEAR(eq.lhs, 3, 1e-9);
  EXPECT_EQ(eq.status, Status::kEquality);
  const auto r = verify_vs_inequality(P("z+2"), unit_blaschke({{{0, 0}, 1}}), kSpec);
  // |(z(z+2))'| = |2z+2| = 4|cos(t/2)| on the circle, mean 8/pi.
  EXPECT_NEAR(r.rhs, 8 / std::numbers::pi, 1e-9);
  // |z+2| is smooth on the circle, so a plain trapezoid sum is accurate.
  double mean = 0;
  const int m = 1 << 10;
  for (int k = 0; k < m; ++k) mean += std::abs(std::polar(1.0, 2 * std::numbers::pi * k / m) + 2.0);
  EXPECT_NEAR(r.lhs, mean / m, 1e-12);
  EXPECT_EQ(r.status, Status::kHolds);
  const auto single = verify_vs_inequality(Polynomial{1}, unit_blaschke({{{0.5, 0}, 1}}), kSpec);
  EXPECT_EQ(single.status, Status::kEquality);
  EXPECT_NEAR(single.lhs, 1, 1e-9);
}

TEST(Lemmas, DAlphaComparabilityOracles) {
  for (double alpha : {0.25, 0.5, 0.75}) {
    const auto r = verify_dalpha_comparability(unit_blaschke({{{0, 0}, 1}}), alpha, kSpec);
    EXPECT_NEAR(*r.value("coefficient_norm_sq"), 1, 1e-12);
    EXPECT_NEAR(*r.value("area_integral"), 1 / (1 - alpha), 1e-9);
    EXPECT_GE(*r.value("r_alpha_min"), -1e-8);
  }
  const auto r = verify_dalpha_comparability(unit_blaschke({{{0, 0}, 2}}), 0.5, kSpec);
  EXPECT_NEAR(*r.value("coefficient_norm_sq"), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(*r.value("area_integral"), 2 / 0.5 - 1 / 1.5, 1e-9);
}

TEST(Lemmas, DAlphaRadialFamilyStaysBracketed) {
  double lo = 1e300, hi = 0;
  for (int K = 1; K <= 8; ++K) {
    std::vector<BlaschkeZero> zs;
    for (int k = 1; k <= K; ++k) zs.push_back({{1 - std::ldexp(1.0, -k), 0}, 1});
    const auto r = verify_dalpha_comparability(unit_blaschke(zs), 0.5, kSpec);
    EXPECT_EQ(r.status, Status::kHolds);
    lo = std::min(lo, *r.value("ratio"));
    hi = std::max(hi, *r.value("ratio"));
  }
  EXPECT_LT(hi / lo, 4);
}

TEST(Lemmas, RAlphaIsNonnegative) {
  std::mt19937_64 rng(abca::testing::test_seed() + 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<BlaschkeZero> zs;
    for (int k = 0; k < 3; ++k) {
      const double r = 0.9 * std::sqrt(std::uniform_real_distribution<>(0, 1)(rng));
      zs.push_back({std::polar(r, std::uniform_real_distribution<>(0, 6.28)(rng)), 1});
    }
    const Polynomial f = abca::testing::random_poly(rng, 3, 5);
    for (double alpha : {0.25, 0.5, 0.75}) EXPECT_GE(r_alpha(f, unit_blaschke(zs), alpha).value, -1e-8);
  }
}

TEST(LimitDemo, ClosedForms) {
  const auto t = limit_demo(P("z^3+1"), {2, 5, 10, 50, 100}, kSpec);
  ASSERT_EQ(t.rows.size(), 5u);
  for (const auto& row : t.rows) {
    const double r3 = row.radius * row.radius * row.radius;
    EXPECT_NEAR(row.kappa, 3 * r3 / (r3 - 1), 1e-9 * row.kappa);
    EXPECT_NEAR(row.mu, (r3 + 1) / (r3 - 1), 1e-9);
  }
  EXPECT_NEAR(t.rows[2].kappa, 3.003003003, 1e-8);
  EXPECT_TRUE(t.kappa_ok);
  EXPECT_TRUE(t.mu_ok);
  EXPECT_TRUE(t.monotone);

  const auto c = limit_demo(P("7"), {1, 10}, kSpec);
  for (const auto& row : c.rows) {
    EXPECT_EQ(row.kappa, 0);
    EXPECT_NEAR(row.mu, 1, 1e-15);
  }
  const auto m = limit_demo(P("5z^2"), {0.5, 3, 40}, kSpec);
  for (const auto& row : m.rows) {
    EXPECT_NEAR(row.kappa, 2, 1e-12);
    EXPECT_NEAR(row.mu, 1, 1e-12);
  }
}

TEST(LimitDemo, ZeroOnScheduledCircleIsSkipped) {
  const auto t = limit_demo(P("z-2"), {1, 2, 4}, kSpec);
  EXPECT_FALSE(t.rows[0].skipped);
  EXPECT_TRUE(t.rows[1].skipped);
  EXPECT_FALSE(t.warnings.empty());
}
