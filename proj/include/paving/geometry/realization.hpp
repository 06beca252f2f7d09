#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paving/algebra/determinant.hpp"
#include "paving/algebra/linalg.hpp"
#include "paving/matroid/paving_matroid.hpp"

namespace paving {

/// One exact rational vector per point id.
struct Realization {
  int dim = 0;
  std::map<int, Vector> points;
  std::optional<std::uint64_t> seed;
  std::string matroid;

  PointSet point_set() const {
    PointSet s;
    for (const auto& [p, v] : points) s.insert(p);
    return s;
  }

  const Vector& at(int p) const {
    auto it = points.find(p);
    if (it == points.end()) throw IndexMismatch("realization has no vector for point " + std::to_string(p));
    return it->second;
  }

  std::vector<Vector> vectors(PointSet s) const {
    std::vector<Vector> out;
    for (int p : s) out.push_back(at(p));
    return out;
  }

  std::size_t rank(PointSet s) const { return rank_of_vectors(vectors(s), dim); }
  std::size_t rank() const { return rank(point_set()); }

  friend bool operator==(const Realization&, const Realization&) = default;
};

using Assignment = std::map<Variable, Scalar>;

/// x[r,p] = gamma_p[r] plus the given extra vectors.
inline Assignment assignment_for(const Realization& g, const std::map<ExtraLabel, Vector>& extras = {}) {
  Assignment a;
  for (const auto& [p, v] : g.points)
    for (int r = 0; r < g.dim; ++r) a.emplace(Variable::entry(r + 1, p), v[r]);
  for (const auto& [label, v] : extras) {
    if (static_cast<int>(v.size()) != g.dim) throw DimensionMismatch("extra vector length differs from dimension");
    for (int r = 0; r < g.dim; ++r) a.emplace(Variable::extra(r + 1, label), v[r]);
  }
  return a;
}

inline void check_indexed(const Realization& g, const PavingMatroid& m) {
  if (g.point_set() != m.ground())
    throw IndexMismatch("realization points " + g.point_set().to_string() + " differ from ground set " +
                        m.ground().to_string());
  if (g.dim != m.rank()) throw IndexMismatch("realization dimension differs from matroid rank");
  for (const auto& [p, v] : g.points)
    if (static_cast<int>(v.size()) != g.dim) throw IndexMismatch("vector length differs from dimension");
}

/// Every n-circuit spans at most n-1 dimensions.
inline bool in_circuit_variety(const Realization& g, const PavingMatroid& m) {
  check_indexed(g, m);
  for (auto c : m.circuits_n())
    if (g.rank(c) > static_cast<std::size_t>(m.rank() - 1)) return false;
  return true;
}

/// Realization space membership: dependencies exactly those of M on sets of
/// size at most n (larger sets are dependent in K^n anyway).
inline bool in_realization_space(const Realization& g, const PavingMatroid& m) {
  if (!in_circuit_variety(g, m)) return false;
  const int n = m.rank();
  for (int k = 1; k <= n; ++k) {
    bool ok = true;
    for_each_subset(m.ground(), k, [&](PointSet s) {
      if (!ok) return;
      bool dependent = k == n && m.in_hyperplane(s);
      if (dependent) return;
      if (k == n) {
        ScalarMatrix mat = matrix_from_columns(g.vectors(s), n);
        if (is_zero(bareiss_determinant(mat))) ok = false;
      } else if (g.rank(s) != static_cast<std::size_t>(k)) {
        ok = false;
      }
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace paving
