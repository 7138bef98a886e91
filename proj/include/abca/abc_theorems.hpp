#pragma once

#include <span>

#include "abca/polynomial.hpp"

namespace abca {

struct IntegerInequality {
  bool holds = false;
  long lhs = 0;
  long rhs = 0;
};

// max(deg a, deg b, deg c) < N~(abc) with c = a + b.
// Throws HypothesisViolation for non-coprime or all-constant input.
IntegerInequality mason_check(const Polynomial& a, const Polynomial& b);

// For linearly independent p_0..p_n with p_{n+1} = sum p_j and pairwise
// disjoint zero sets: max deg p_j <= n N~(p_0...p_{n+1}) - n(n+1)/2.
// Throws HypothesisViolation naming the failed hypothesis.
IntegerInequality n_theorem_check(std::span<const Polynomial> ps);

}  // namespace abca
