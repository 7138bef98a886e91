#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "abca/abc_theorems.hpp"
#include "abca/errors.hpp"
#include "abca/polynomial.hpp"
#include "abca/roots.hpp"
#include "abca/wronskian.hpp"
#include "test_support.hpp"

namespace abca {
namespace {

using testing::euclid_gcd;
using testing::from_roots;
using testing::random_poly;

Polynomial P(const char* s) { return Polynomial::parse_sugar(s); }
GaussianRational Q(const char* s) { return GaussianRational::parse(s); }

TEST(GaussianRational, ParsesCanonicalForms) {
  EXPECT_EQ(Q("1/2+3/4·i"), GaussianRational(mpq_class(1, 2), mpq_class(3, 4)));
  EXPECT_EQ(Q("2/4"), GaussianRational(mpq_class(1, 2)));
  EXPECT_EQ(Q("-i"), GaussianRational(0, -1));
  EXPECT_EQ(Q("1/2-1/3*i"), GaussianRational(mpq_class(1, 2), mpq_class(-1, 3)));
  EXPECT_EQ(Q("0.25"), GaussianRational(mpq_class(1, 4)));
  EXPECT_EQ(Q("1e-2"), GaussianRational(mpq_class(1, 100)));
}

TEST(GaussianRational, RoundTripsThroughString) {
  std::mt19937_64 rng(testing::test_seed());
  for (int t = 0; t < 200; ++t) {
    const GaussianRational g = testing::random_gaussian(rng, 50);
    EXPECT_EQ(GaussianRational::parse(g.to_string()), g) << g.to_string();
  }
}

TEST(GaussianRational, RejectsMalformedText) {
  EXPECT_THROW(Q("1/0"), std::invalid_argument);
  EXPECT_THROW(Q("abc"), std::invalid_argument);
  EXPECT_THROW(Q(""), std::invalid_argument);
  EXPECT_THROW(GaussianRational(1) / GaussianRational(0), std::domain_error);
}

TEST(GaussianRational, FieldArithmetic) {
  const GaussianRational a = Q("1/2+i"), b = Q("3-2/5·i");
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a * a.conj(), GaussianRational(a.norm()));
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
}

TEST(Polynomial, SugarParser) {
  EXPECT_EQ(P("z^2-1"), Polynomial({-1, 0, 1}));
  EXPECT_EQ(P("3z^4+1/2z-i"), Polynomial({Q("-i"), Q("1/2"), 0, 0, 3}));
  EXPECT_EQ(P("(1/2+i)z^3"), Polynomial::monomial(Q("1/2+i"), 3));
  EXPECT_EQ(P("-z"), Polynomial({0, -1}));
  EXPECT_EQ(P("7"), Polynomial::constant(7));
  EXPECT_THROW(P("z^"), std::invalid_argument);
  EXPECT_THROW(P("z^2+"), std::invalid_argument);
}

TEST(Polynomial, ZeroHasDegreeMinusOne) {
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(Polynomial({0, 0}).degree(), -1);
  EXPECT_EQ((P("z^2") - P("z^2")).degree(), -1);
}

TEST(Polynomial, DivmodReconstructs) {
  std::mt19937_64 rng(testing::test_seed() + 1);
  for (int t = 0; t < 50; ++t) {
    const Polynomial a = random_poly(rng, 7, 9), b = random_poly(rng, 3, 9);
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(exact_quotient(P("z^2+1"), P("z-1")), std::domain_error);
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(P("z^2"), P("z^3")), P("z^2"));
  EXPECT_EQ(poly_gcd(P("z^2-1"), P("z-1")), P("z-1"));
  // (z-1)^2 (z+2) = z^3 - 3z + 2 and (z-1)(z-3) = z^2 - 4z + 3.
  EXPECT_EQ(poly_gcd(P("z^3-3z+2"), P("z^2-4z+3")), P("z-1"));
}

TEST(PolyGcd, BothZeroIsUndefined) {
  try {
    poly_gcd(Polynomial(), Polynomial());
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "undefined gcd");
  }
  EXPECT_EQ(poly_gcd(P("2z+2"), Polynomial()), P("z+1"));
}

TEST(PolyGcd, MatchesPlainEuclidAndDivides) {
  std::mt19937_64 rng(testing::test_seed() + 2);
  for (int t = 0; t < 100; ++t) {
    const Polynomial common = random_poly(rng, t % 4, 5);
    const Polynomial a = random_poly(rng, 1 + t % 5, 7) * common;
    const Polynomial b = random_poly(rng, 1 + (t / 5) % 5, 7) * common;
    const Polynomial g = poly_gcd(a, b);
    EXPECT_EQ(g, euclid_gcd(a, b));
    EXPECT_TRUE(divmod(a, g).second.is_zero());
    EXPECT_TRUE(divmod(b, g).second.is_zero());
    EXPECT_GE(g.degree(), common.degree());
  }
}

TEST(SquarefreePart, Examples) {
  EXPECT_EQ(squarefree_part(P("z^3")), P("z"));
  EXPECT_EQ(squarefree_part(from_roots({1, 1, -1})), P("z^2-1"));
  EXPECT_EQ(squarefree_part(P("z^2+1")), P("z^2+1"));
  EXPECT_THROW(squarefree_part(Polynomial()), std::exception);
}

TEST(DistinctZeroCount, Examples) {
  EXPECT_EQ(distinct_zero_count(P("z^5")), 1u);
  EXPECT_EQ(distinct_zero_count(P("z^4-z^2")), 3u);
  EXPECT_EQ(distinct_zero_count(P("7")), 0u);
  EXPECT_THROW(distinct_zero_count(Polynomial()), std::exception);
}

TEST(SquarefreeDecomposition, RecoversConstructedMultiplicities) {
  const GaussianRational a = Q("1/2+i"), b = Q("-3"), c = Q("2/7·i");
  const Polynomial p = Polynomial::constant(Q("5/3")) * from_roots({a, b, b, c, c, c, c});
  const auto fs = squarefree_decomposition(p);
  Polynomial rebuilt = Polynomial::constant(p.leading());
  std::vector<int> mults;
  for (const auto& f : fs) {
    rebuilt *= f.factor.pow(f.multiplicity);
    mults.push_back(f.multiplicity);
  }
  EXPECT_EQ(rebuilt, p);
  EXPECT_EQ(mults, (std::vector<int>{1, 2, 4}));
}

TEST(SquarefreePart, DegreeMatchesNumericDistinctRoots) {
  std::mt19937_64 rng(testing::test_seed() + 3);
  for (int t = 0; t < 60; ++t) {
    const int deg = 1 + t % 12;
    const Polynomial p = random_poly(rng, deg, 20);
    const auto coeffs = p.to_complex();
    const auto roots = poly_roots(coeffs);
    const auto clusters = cluster_roots(roots, 1e-8);
    EXPECT_EQ(clusters.size(), distinct_zero_count(p)) << p.to_string();
  }
}

TEST(SquarefreePart, DegreeMatchesClusteredRootsWithRepeats) {
  std::mt19937_64 rng(testing::test_seed() + 4);
  std::uniform_int_distribution<long> small(-9, 9);
  for (int t = 0; t < 40; ++t) {
    std::vector<GaussianRational> roots;
    const int distinct = 1 + t % 6;
    for (int k = 0; k < distinct; ++k) {
      GaussianRational r(mpq_class(small(rng), 4), mpq_class(small(rng), 4));
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
      roots.push_back(r);
      if (k % 2 == 0) roots.push_back(r);
    }
    const Polynomial p = from_roots(roots);
    const auto numeric = poly_roots(p.to_complex());
    double scale = 1;
    for (const auto& r : numeric) scale = std::max(scale, std::abs(r));
    EXPECT_EQ(cluster_roots(numeric, 1e-6 * scale).size(), distinct_zero_count(p)) << p.to_string();
  }
}

TEST(Wronskian, Examples) {
  const Polynomial fs[] = {P("1"), P("1/10z"), P("1/20z^2")};
  EXPECT_EQ(wronskian_poly(fs), Polynomial::constant(Q("1/100")));
  const Polynomial two[] = {P("1"), P("z")};
  EXPECT_EQ(wronskian_poly(two), P("1"));
  const Polynomial three[] = {P("1"), P("z"), P("z^2+z")};
  EXPECT_EQ(wronskian_poly(three), P("2"));
}

TEST(Wronskian, DependentInputsGiveZero) {
  const Polynomial fs[] = {P("z^2+1"), P("z"), P("2z^2+3z+2")};
  EXPECT_TRUE(wronskian_poly(fs).is_zero());
}

TEST(Wronskian, AlternatingUnderSwap) {
  std::mt19937_64 rng(testing::test_seed() + 5);
  for (int t = 0; t < 20; ++t) {
    std::vector<Polynomial> fs;
    for (int j = 0; j < 4; ++j) fs.push_back(random_poly(rng, 2 + (t + j) % 5, 6));
    const Polynomial w = wronskian_poly(fs);
    std::swap(fs[1], fs[3]);
    EXPECT_EQ(wronskian_poly(fs), -w);
  }
}

TEST(Wronskian, DegreeBound) {
  std::mt19937_64 rng(testing::test_seed() + 6);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 4;
    std::vector<Polynomial> fs;
    int total = 0;
    for (int j = 0; j <= n; ++j) {
      fs.push_back(random_poly(rng, (t + 2 * j) % 7, 6));
      total += fs.back().degree();
    }
    const Polynomial w = wronskian_poly(fs);
    if (!w.is_zero()) {
      EXPECT_LE(w.degree(), total - n * (n + 1) / 2);
    }
  }
}

TEST(Wronskian, BareissMatchesCofactor) {
  std::mt19937_64 rng(testing::test_seed() + 7);
  for (int n = 1; n <= 6; ++n) {
    std::vector<Polynomial> fs;
    for (int j = 0; j <= n; ++j) fs.push_back(random_poly(rng, n + j, 4));
    const PolyMatrix m = wronskian_matrix(fs);
    EXPECT_EQ(determinant_bareiss(m), determinant_cofactor(m)) << "n=" << n;
  }
}

TEST(Wronskian, BumpedRowGivesDerivative) {
  std::mt19937_64 rng(testing::test_seed() + 8);
  for (int t = 0; t < 20; ++t) {
    std::vector<Polynomial> fs;
    for (int j = 0; j <= 1 + t % 4; ++j) fs.push_back(random_poly(rng, 1 + (j + t) % 8, 5));
    EXPECT_EQ(wronskian_derivative_poly(fs), wronskian_poly(fs).derivative());
  }
}

TEST(MasonCheck, Examples) {
  auto r = mason_check(P("1"), P("z^2-1"));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, 2);
  EXPECT_EQ(r.rhs, 3);
  r = mason_check(P("z^4"), P("1"));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, 4);
  EXPECT_EQ(r.rhs, 5);
}

TEST(MasonCheck, RejectsInvalidInput) {
  try {
    mason_check(P("z"), P("-z"));
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_NE(std::string(e.what()).find("not relatively prime"), std::string::npos);
  }
  try {
    mason_check(P("2"), P("3"));
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_NE(std::string(e.what()).find("trivial input"), std::string::npos);
  }
}

TEST(MasonCheck, HoldsOnRandomCoprimePairs) {
  std::mt19937_64 rng(testing::test_seed() + 9);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const Polynomial a = random_poly(rng, t % 9, 20), b = random_poly(rng, (t / 9) % 9, 20);
    if (poly_gcd(a, b).degree() > 0 || (a.is_constant() && b.is_constant())) continue;
    const auto r = mason_check(a, b);
    EXPECT_TRUE(r.holds) << a.to_string() << " | " << b.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

TEST(MasonCheck, CubesAreNeverACube) {
  std::mt19937_64 rng(testing::test_seed() + 10);
  for (int t = 0; t < 40; ++t) {
    const Polynomial a = random_poly(rng, 1 + t % 3, 6), b = random_poly(rng, 1 + (t / 3) % 3, 6);
    if (poly_gcd(a, b).degree() > 0) continue;
    const Polynomial a3 = a.pow(3), b3 = b.pow(3), c3 = a3 + b3;
    if (c3.is_zero()) continue;
    const auto r = mason_check(a3, b3);
    EXPECT_TRUE(r.holds);
    // Were c3 = C^3, the zero count would be at most deg a + deg b + deg C,
    // forcing 3d < 3d; so c3 must have a multiplicity not divisible by 3.
    bool cube = true;
    for (const auto& f : squarefree_decomposition(c3)) cube = cube && f.multiplicity % 3 == 0;
    EXPECT_FALSE(cube);
  }
}

TEST(NTheoremCheck, ReducesToMasonForTwoPolynomials) {
  const Polynomial ps[] = {P("1"), P("z^2-1")};
  const auto r = n_theorem_check(ps);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, 2);
  EXPECT_EQ(r.rhs, 2);
}

TEST(NTheoremCheck, SharedZeroAtOriginIsRejected) {
  // z/10 and z^2/200 both vanish at 0, so the disjointness hypothesis fails.
  const Polynomial ps[] = {P("1"), P("1/10z"), P("1/200z^2")};
  try {
    n_theorem_check(ps);
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_NE(std::string(e.what()).find("not pairwise disjoint"), std::string::npos);
  }
}

TEST(NTheoremCheck, DisjointTripleHolds) {
  // p_3 = z^2 + z + 1 has the two primitive cube roots of unity as zeros.
  const Polynomial ps[] = {P("1"), P("z-1"), P("z^2+1")};
  const auto r = n_theorem_check(ps);
  // Distinct zeros: 1, i, -i and the two cube roots.
  EXPECT_EQ(r.lhs, 2);
  EXPECT_EQ(r.rhs, 2 * 5 - 3);
  EXPECT_TRUE(r.holds);
}

TEST(NTheoremCheck, HoldsOnRandomAdmissibleSystems) {
  std::mt19937_64 rng(testing::test_seed() + 11);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    std::vector<Polynomial> ps;
    for (int j = 0; j <= 2 + t % 2; ++j) ps.push_back(random_poly(rng, (t + 3 * j) % 6, 9));
    try {
      EXPECT_TRUE(n_theorem_check(ps).holds);
      ++checked;
    } catch (const HypothesisViolation&) {
    }
  }
  EXPECT_GT(checked, 30);
}

TEST(NTheoremCheck, RejectsDependentInputs) {
  const Polynomial ps[] = {P("z+1"), P("z+1"), P("z^2")};
  try {
    n_theorem_check(ps);
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_NE(std::string(e.what()).find("linearly dependent"), std::string::npos);
  }
}

TEST(NTheoremCheck, RejectsSharedZeros) {
  const Polynomial ps[] = {P("z"), P("z^2+z"), P("1")};
  EXPECT_THROW(n_theorem_check(ps), HypothesisViolation);
}

}  // namespace
}  // namespace abca
