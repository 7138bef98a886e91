#pragma once

#include <span>
#include <vector>

#include "abca/domain.hpp"

namespace abca {

struct RootOptions {
  int max_iterations = 500;
  // Normalized residual every returned root must meet.
  double residual_tol = 1e-10;
};

// All deg p roots, repeated by multiplicity, for p given by complex
// coefficients indexed by power. Aberth-Ehrlich iteration from a perturbed
// circle. Throws std::invalid_argument for degree < 1 and RootFindingFailure
// when the iteration stalls.
std::vector<Complex> poly_roots(std::span<const Complex> coeffs, const RootOptions& opts = {});

// |p(r)| / (max|c_k| * max(1,|r|)^deg).
double normalized_residual(std::span<const Complex> coeffs, Complex r);

struct RootCluster {
  Complex center;
  int multiplicity = 0;
};

// Single-linkage clustering: roots closer than radius end up in one cluster.
// Order follows the first member of each cluster.
std::vector<RootCluster> cluster_roots(std::span<const Complex> roots, double radius);

}  // namespace abca
