#pragma once

#include <vector>

#include "paving/algebra/matrix.hpp"

namespace paving {

using Vector = std::vector<Scalar>;

namespace detail {

// Fraction-free row echelon form. Rows are first scaled to integers, then
// eliminated with the Bareiss update, so intermediate entries stay minors of
// the input instead of growing as products of fractions.
struct Echelon {
  ScalarMatrix form;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  int swaps = 0;
  Scalar last_pivot = 1;
};

inline Echelon fraction_free_echelon(ScalarMatrix a, bool clear_denominators = true) {
  const std::size_t m = a.rows(), n = a.cols();
  if (clear_denominators) {
    for (std::size_t r = 0; r < m; ++r) {
      mpz_class l = 1;
      for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
      if (l != 1)
        for (std::size_t c = 0; c < n; ++c) a(r, c) *= l;
    }
  }
  Echelon e;
  Scalar prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && is_zero(a(p, col))) ++p;
    if (p == m) continue;
    if (p != row) {
      a.swap_rows(p, row);
      ++e.swaps;
    }
    const Scalar piv = a(row, col);
    for (std::size_t i = row + 1; i < m; ++i) {
      const Scalar f = a(i, col);
      for (std::size_t j = col + 1; j < n; ++j) a(i, j) = (piv * a(i, j) - f * a(row, j)) / prev;
      a(i, col) = 0;
    }
    prev = piv;
    e.pivots.push_back(col);
    ++row;
  }
  e.last_pivot = prev;
  e.form = std::move(a);
  return e;
}

}  // namespace detail

inline std::size_t exact_rank(const ScalarMatrix& m) { return detail::fraction_free_echelon(m).pivots.size(); }

/// Basis of the right kernel: one vector per free column, with a 1 in that
/// column and 0 in the other free columns.
inline std::vector<Vector> exact_kernel(const ScalarMatrix& m) {
  auto e = detail::fraction_free_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector z(n, Scalar(0));
    z[f] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      std::size_t pc = e.pivots[k];
      Scalar s = 0;
      for (std::size_t j = pc + 1; j < n; ++j)
        if (!is_zero(e.form(k, j)) && !is_zero(z[j])) s += e.form(k, j) * z[j];
      z[pc] = -s / e.form(k, pc);
    }
    basis.push_back(std::move(z));
  }
  return basis;
}

inline Scalar bareiss_determinant(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  auto e = detail::fraction_free_echelon(m, false);
  if (e.pivots.size() < m.rows()) return 0;
  return e.swaps % 2 ? Scalar(-e.last_pivot) : e.last_pivot;
}

// Columns are the given vectors.
inline ScalarMatrix matrix_from_columns(const std::vector<Vector>& cols, std::size_t dim) {
  ScalarMatrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw DimensionMismatch("vector length differs from ambient dimension");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

inline std::size_t rank_of_vectors(const std::vector<Vector>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return exact_rank(matrix_from_columns(vs, dim));
}

inline Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vector cross(const Vector& a, const Vector& b) {
  if (a.size() != 3 || b.size() != 3) throw DimensionMismatch("cross product needs 3-vectors");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace paving
