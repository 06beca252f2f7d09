#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "paving/geometry/realization.hpp"

namespace paving {

/// {x : normal . x = 0}
struct Hyperplane {
  Vector normal;

  explicit Hyperplane(Vector n) : normal(std::move(n)) {
    bool nz = false;
    for (const auto& x : normal) nz = nz || !is_zero(x);
    if (!nz) throw DimensionMismatch("hyperplane normal must be nonzero");
  }
  static Hyperplane coordinate(int n, int index) {
    Vector v(n, Scalar(0));
    v[index - 1] = 1;
    return Hyperplane(std::move(v));
  }
  bool contains(const Vector& v) const { return is_zero(dot(normal, v)); }
};

/// Central projection from q onto H: v - (h.v / h.q) q.
inline Realization project(const Realization& g, const Hyperplane& h, const Vector& q) {
  if (static_cast<int>(q.size()) != g.dim || static_cast<int>(h.normal.size()) != g.dim)
    throw DimensionMismatch("projection data has the wrong dimension");
  Scalar hq = dot(h.normal, q);
  if (is_zero(hq)) throw CenterOnHyperplane("projection center lies on the hyperplane");
  Realization out = g;
  for (auto& [p, v] : out.points) {
    if (rank_of_vectors({v, q}, g.dim) < 2) throw PointThroughCenter(p, "point " + std::to_string(p) + " is on a line through the center with 0");
    Scalar t = dot(h.normal, v) / hq;
    for (int r = 0; r < g.dim; ++r) v[r] -= t * q[r];
  }
  return out;
}

/// Invertible T with T(H) = {x_n = 0} and T q = e_n: the inverse has columns
/// (basis of H, q).
inline ScalarMatrix normalizing_transform(const Hyperplane& h, const Vector& q) {
  const std::size_t n = q.size();
  if (h.contains(q)) throw CenterOnHyperplane("q lies on the hyperplane");
  ScalarMatrix a(1, n);
  for (std::size_t j = 0; j < n; ++j) a(0, j) = h.normal[j];
  auto basis = exact_kernel(a);
  basis.push_back(q);
  ScalarMatrix inv = matrix_from_columns(basis, n);
  // invert by solving inv * X = I column by column through the kernel of [inv | -e_j]
  ScalarMatrix t(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    ScalarMatrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) aug(r, c) = inv(r, c);
      aug(r, n) = r == j ? Scalar(-1) : Scalar(0);
    }
    auto ker = exact_kernel(aug);
    const Vector& z = ker.at(0);
    for (std::size_t r = 0; r < n; ++r) t(r, j) = z[r] / z[n];
  }
  return t;
}

inline Vector apply(const ScalarMatrix& t, const Vector& v) {
  Vector out(t.rows(), Scalar(0));
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c) out[r] += t(r, c) * v[c];
  return out;
}

/// M_q^gamma: the liftability matrix of `circuits` evaluated at gamma and q.
inline ScalarMatrix evaluated_liftability_matrix(const Realization& g, PointSet points, const std::vector<PointSet>& circuits,
                                                 const Vector& q) {
  const int n = g.dim;
  ScalarMatrix m(circuits.size(), points.size());
  for (std::size_t r = 0; r < circuits.size(); ++r) {
    std::vector<int> c = circuits[r].elements();
    for (int s = 0; s < n; ++s) {
      std::vector<Vector> cols;
      for (int t = 0; t < n; ++t)
        if (t != s) cols.push_back(g.at(c[t]));
      cols.push_back(q);
      Scalar d = bareiss_determinant(matrix_from_columns(cols, n));
      m(r, points.index_of(c[s])) = s % 2 ? Scalar(-d) : d;
    }
  }
  return m;
}

inline ScalarMatrix evaluated_liftability_matrix(const Realization& g, const PavingMatroid& m, const Vector& q) {
  return evaluated_liftability_matrix(g, m.ground(), m.circuits_n(), q);
}

struct LiftOutcome {
  std::size_t kernel_dimension = 0;
  std::optional<Realization> lifted;
};

/// gamma lies in a hyperplane (rank n-1) not containing q. z is in the kernel
/// of M_q^gamma iff gamma_p + z_p q lies in V_C(M); the coordinate rows
/// (gamma_p[r])_p span the (n-1)-dimensional part of the kernel that keeps
/// everything in one hyperplane. A kernel vector outside that part, scaled by
/// `scale`, gives a lift of full rank.
inline LiftOutcome lift(const Realization& g, const Vector& q, const PavingMatroid& m, const Scalar& scale = 1) {
  check_indexed(g, m);
  const int n = m.rank();
  if (static_cast<int>(q.size()) != n) throw DimensionMismatch("q has the wrong dimension");
  if (g.rank() != static_cast<std::size_t>(n - 1)) throw RankDefect("lift needs points spanning a hyperplane");
  auto pts = g.vectors(g.point_set());
  pts.push_back(q);
  if (rank_of_vectors(pts, n) != static_cast<std::size_t>(n)) throw CenterOnHyperplane("q lies in the span of the points");
  if (is_zero(scale)) throw DimensionMismatch("lift scale must be nonzero");

  ScalarMatrix mq = evaluated_liftability_matrix(g, m, q);
  auto ker = exact_kernel(mq);
  LiftOutcome out;
  out.kernel_dimension = ker.size();
  if (ker.size() < static_cast<std::size_t>(n)) return out;

  const std::vector<int> ids = m.ground().elements();
  std::vector<Vector> degenerate;
  for (int r = 0; r < n; ++r) {
    Vector row;
    for (int p : ids) row.push_back(g.at(p)[r]);
    degenerate.push_back(std::move(row));
  }
  const std::size_t d = ids.size();
  const std::size_t base = rank_of_vectors(degenerate, d);
  for (const auto& z : ker) {
    auto probe = degenerate;
    probe.push_back(z);
    if (rank_of_vectors(probe, d) == base) continue;
    Realization lifted = g;
    for (std::size_t i = 0; i < d; ++i) {
      auto& v = lifted.points.at(ids[i]);
      for (int r = 0; r < n; ++r) v[r] += scale * z[i] * q[r];
    }
    out.lifted = std::move(lifted);
    break;
  }
  return out;
}

/// Hyperplanes l whose points span n-1 dimensions under gamma.
inline std::vector<PointSet> regular_hyperplanes(const Realization& g, const PavingMatroid& m) {
  check_indexed(g, m);
  std::vector<PointSet> out;
  for (auto l : m.hyperplanes())
    if (g.rank(l) == static_cast<std::size_t>(m.rank() - 1)) out.push_back(l);
  return out;
}

/// Ordered pairs of distinct regular hyperplanes with the same span.
inline std::size_t lifting_number(const Realization& g, const PavingMatroid& m) {
  auto reg = regular_hyperplanes(g, m);
  std::size_t count = 0;
  for (std::size_t i = 0; i < reg.size(); ++i)
    for (std::size_t j = 0; j < reg.size(); ++j)
      if (i != j && g.rank(reg[i] | reg[j]) == static_cast<std::size_t>(m.rank() - 1)) ++count;
  return count;
}

}  // namespace paving
