#pragma once

#include <span>
#include <vector>

#include "abca/polynomial.hpp"

namespace abca {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Rows are successive derivatives: entry (i, j) = fs[j]^(i), i = 0..n.
// With bump_last_row the final row holds the (n+1)-th derivatives instead
// of the n-th, which gives the determinant formula for W'.
PolyMatrix wronskian_matrix(std::span<const Polynomial> fs, bool bump_last_row = false);

// Laplace expansion along the first row.
Polynomial determinant_cofactor(const PolyMatrix& m);

// Fraction-free (Bareiss) elimination with exact polynomial division.
Polynomial determinant_bareiss(PolyMatrix m);

// Cofactor expansion up to 5x5, Bareiss above.
Polynomial determinant(const PolyMatrix& m);

// W(f_0, ..., f_n). The zero polynomial signals linear dependence.
Polynomial wronskian_poly(std::span<const Polynomial> fs);

// W' computed from the last-row-bumped determinant rather than by
// differentiating W; must equal wronskian_poly(fs).derivative().
Polynomial wronskian_derivative_poly(std::span<const Polynomial> fs);

}  // namespace abca
