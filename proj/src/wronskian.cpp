#include "abca/wronskian.hpp"

#include <stdexcept>

namespace abca {

namespace {

void require_square(const PolyMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
}

}  // namespace

PolyMatrix wronskian_matrix(std::span<const Polynomial> fs, bool bump_last_row) {
  if (fs.empty()) throw std::invalid_argument("Wronskian of an empty function list");
  const std::size_t size = fs.size();
  PolyMatrix m(size, std::vector<Polynomial>(size));
  for (std::size_t j = 0; j < size; ++j) {
    Polynomial d = fs[j];
    for (std::size_t i = 0; i < size; ++i) {
      if (i + 1 == size && bump_last_row) d = d.derivative();
      m[i][j] = d;
      d = d.derivative();
    }
  }
  return m;
}

Polynomial determinant_cofactor(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(1);
  if (n == 1) return m[0][0];
  Polynomial det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    PolyMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      minor[i - 1].reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) minor[i - 1].push_back(m[i][j]);
    }
    Polynomial term = m[0][col] * determinant_cofactor(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

Polynomial determinant_bareiss(PolyMatrix m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(1);
  bool negate = false;
  Polynomial prev = Polynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return {};
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = Polynomial{};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Polynomial determinant(const PolyMatrix& m) {
  return m.size() <= 5 ? determinant_cofactor(m) : determinant_bareiss(m);
}

Polynomial wronskian_poly(std::span<const Polynomial> fs) {
  return determinant(wronskian_matrix(fs));
}

Polynomial wronskian_derivative_poly(std::span<const Polynomial> fs) {
  return determinant(wronskian_matrix(fs, true));
}

}  // namespace abca
