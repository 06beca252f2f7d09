#pragma once

#include <string>
#include <vector>

#include "paving/algebra/determinant.hpp"
#include "paving/algebra/parallel.hpp"
#include "paving/generators/extra_vector.hpp"
#include "paving/matroid/paving_matroid.hpp"

namespace paving {

struct LabeledPolynomial {
  std::string source;
  Polynomial polynomial;
};

/// Emitted generators plus truncation bookkeeping; budget hits set
/// `truncated` and leave a note instead of throwing.
struct Emission {
  std::vector<LabeledPolynomial> polynomials;
  bool truncated = false;
  std::vector<std::string> notes;
};

/// Determinant of the n x n matrix with the given columns.
inline Polynomial bracket(const std::vector<Column>& cols) {
  const std::size_t n = cols.size();
  PolyMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (cols[c].size() != n) throw DimensionMismatch("bracket column length differs from bracket size");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
  }
  return determinant(m);
}

// [points..., q] with points in the given order.
inline Polynomial point_bracket(const std::vector<int>& points, const ExtraVector& q, int n) {
  std::vector<Column> cols;
  for (int p : points) cols.push_back(point_column(p, n));
  cols.push_back(q.column(n));
  return bracket(cols);
}

/// Entries of the liftability row of circuit c = {c_1 < ... < c_n}: the
/// entry at c_s is (-1)^(s-1) [c minus c_s, q]. Returned in ascending order.
inline std::vector<Polynomial> liftability_row(PointSet circuit, const ExtraVector& q, int n) {
  if (circuit.size() != n) throw DimensionMismatch("circuit size differs from rank");
  std::vector<int> c = circuit.elements();
  std::vector<Polynomial> out;
  for (int s = 0; s < n; ++s) {
    std::vector<int> rest;
    for (int t = 0; t < n; ++t)
      if (t != s) rest.push_back(c[t]);
    Polynomial b = point_bracket(rest, q, n);
    out.push_back(s % 2 ? -b : b);
  }
  return out;
}

inline PolyMatrix liftability_matrix(int n, PointSet points, const std::vector<PointSet>& circuits, const ExtraVector& q) {
  std::vector<int> cols = points.elements();
  PolyMatrix m(circuits.size(), cols.size());
  std::vector<std::string> rl, cl;
  for (std::size_t r = 0; r < circuits.size(); ++r) {
    auto row = liftability_row(circuits[r], q, n);
    int s = 0;
    for (int p : circuits[r]) m(r, points.index_of(p)) = row[s++];
    rl.push_back(circuits[r].to_string());
  }
  for (int p : cols) cl.push_back(std::to_string(p));
  m.set_row_labels(rl);
  m.set_col_labels(cl);
  return m;
}

inline PolyMatrix liftability_matrix(const PavingMatroid& m, const ExtraVector& q) {
  return liftability_matrix(m.rank(), m.ground(), m.circuits_n(), q);
}

inline PolyMatrix liftability_matrix(const Submatroid& s, const ExtraVector& q) {
  return liftability_matrix(s.parent_rank, s.points, s.circuits_n(), q);
}

/// One n x n determinant per n-circuit, columns ascending.
inline std::vector<LabeledPolynomial> circuit_polynomials(const PavingMatroid& m) {
  std::vector<LabeledPolynomial> out;
  const int n = m.rank();
  for (auto c : m.circuits_n()) {
    std::vector<Column> cols;
    for (int p : c) cols.push_back(point_column(p, n));
    out.push_back({"circuit B=" + c.to_string(), bracket(cols)});
  }
  return out;
}

struct LiftingOptions {
  std::size_t max_minor_size = 4;
  std::size_t max_minors = 5000;  // per submatroid
  unsigned threads = 1;
  bool keep_zero = false;
};

/// All (|N|-n+1)-minors of the liftability matrix of N. Structurally empty
/// cases (size <= 0 or larger than a matrix side) give nothing.
inline Emission lifting_polynomials(const Submatroid& sub, const ExtraVector& q, const LiftingOptions& opts = {}) {
  Emission em;
  if (!sub.full_rank())
    throw NotFullRank("submatroid on " + sub.points.to_string() + " has rank " + std::to_string(sub.rank));
  const int n = sub.parent_rank;
  const long s = static_cast<long>(sub.points.size()) - n + 1;
  auto circuits = sub.circuits_n();
  if (s <= 0 || s > static_cast<long>(circuits.size()) || s > sub.points.size()) return em;
  const std::string tag = "N=" + sub.points.to_string();
  if (static_cast<std::size_t>(s) > opts.max_minor_size) {
    em.truncated = true;
    em.notes.push_back("skipped " + tag + ": minor size " + std::to_string(s) + " exceeds budget " +
                       std::to_string(opts.max_minor_size));
    return em;
  }
  PolyMatrix mat = liftability_matrix(n, sub.points, circuits, q);
  auto row_sets = combinations(mat.rows(), s);
  auto col_sets = combinations(mat.cols(), s);
  std::size_t total = row_sets.size() * col_sets.size();
  std::size_t rows_used = row_sets.size();
  if (total > opts.max_minors) {
    em.truncated = true;
    rows_used = std::max<std::size_t>(1, opts.max_minors / col_sets.size());
    rows_used = std::min(rows_used, row_sets.size());
    em.notes.push_back("truncated " + tag + ": " + std::to_string(total) + " minors exceed budget " +
                       std::to_string(opts.max_minors));
  }
  std::vector<int> pts = sub.points.elements();
  auto per_rows = parallel_map<std::vector<LabeledPolynomial>>(rows_used, opts.threads, [&](std::size_t ri) {
    std::vector<LabeledPolynomial> out;
    MinorExpander<Polynomial> ex(mat);
    const auto& rs = row_sets[ri];
    std::string rows_label = "[";
    for (std::size_t i = 0; i < rs.size(); ++i) rows_label += (i ? "," : "") + circuits[rs[i]].to_string();
    rows_label += "]";
    for (const auto& cs : col_sets) {
      Polynomial p = ex.minor(rs, cs);
      if (p.is_zero() && !opts.keep_zero) continue;
      PointSet cols;
      for (auto c : cs) cols.insert(pts[c]);
      out.push_back({"lifting-minor " + tag + " rows=" + rows_label + " cols=" + cols.to_string() + " q=" + q.describe(),
                     std::move(p)});
    }
    return out;
  });
  for (auto& v : per_rows)
    for (auto& lp : v) {
      if (em.polynomials.size() >= opts.max_minors) break;
      em.polynomials.push_back(std::move(lp));
    }
  return em;
}

inline Emission lifting_polynomials(const PavingMatroid& m, const Submatroid& sub, const ExtraVector& q,
                                    const LiftingOptions& opts = {}) {
  if (!sub.points.is_subset_of(m.ground())) throw UnknownPoint("submatroid points outside the matroid");
  return lifting_polynomials(sub, q, opts);
}

/// Lifting generators over the enumerated full-rank submatroids, once per
/// extra vector in `qs`.
inline Emission lifting_family(const PavingMatroid& m, const std::vector<ExtraVector>& qs, const LiftingOptions& opts = {},
                               SubmatroidMode mode = SubmatroidMode::hyperplane_unions) {
  Emission em;
  for (const auto& sub : full_rank_submatroids(m, mode))
    for (const auto& q : qs) {
      auto part = lifting_polynomials(sub, q, opts);
      em.truncated = em.truncated || part.truncated;
      for (auto& note : part.notes)
        if (em.notes.empty() || em.notes.back() != note) em.notes.push_back(std::move(note));
      for (auto& lp : part.polynomials) em.polynomials.push_back(std::move(lp));
    }
  return em;
}

inline std::vector<ExtraVector> canonical_basis(int n) {
  std::vector<ExtraVector> out;
  for (int i = 1; i <= n; ++i) out.push_back(ExtraVector::canonical(n, i));
  return out;
}

}  // namespace paving
