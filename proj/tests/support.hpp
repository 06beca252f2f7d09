#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "paving/gc/extensor.hpp"
#include "paving/generators/family.hpp"
#include "paving/geometry/lift.hpp"
#include "paving/geometry/samplers.hpp"
#include "paving/geometry/verify.hpp"

namespace paving::testing {

inline std::string golden_path(const std::string& name) { return std::string(PAVING_GOLDEN_DIR) + "/" + name + ".txt"; }

// '#' lines are headers; everything else is one bracket form.
inline BracketForm golden(const std::string& name) {
  std::ifstream in(golden_path(name));
  if (!in) throw ParseError("missing golden file " + name);
  std::string line, body;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') body += line + " ";
  return parse_bracket_form(body);
}

struct NamedGraph {
  std::string matroid;
  GraphData data;
};

inline GraphData qs_graph() {
  return {PointSet{1, 5, 6}, {2, 4, 3}, {PointSet{2, 4, 6}, PointSet{3, 4, 5}, PointSet{1, 2, 3}}, {}};
}
inline GraphData pascal_graph() {
  return {PointSet{7, 8, 9},
          {1, 6, 5, 4, 3, 2},
          {PointSet{1, 6, 9}, PointSet{5, 6, 8}, PointSet{4, 5, 7}, PointSet{3, 4, 9}, PointSet{2, 3, 8}, PointSet{1, 2, 7}},
          {}};
}
inline GraphData fig2c_graph() {
  return {PointSet{6, 7, 8},
          {1, 2, 5, 3, 4},
          {PointSet{1, 2, 3}, PointSet{2, 5, 7}, PointSet{1, 5, 6}, PointSet{3, 4, 7}, PointSet{1, 4, 8}},
          {}};
}
inline GraphData fig2r_graph() {
  return {PointSet{5, 6, 7}, {1, 2, 3, 4}, {PointSet{1, 3, 6}, PointSet{1, 2, 5}, PointSet{2, 3, 4}, PointSet{1, 4, 7}}, {}};
}

// the displayed instances, with the golden file of each
inline std::vector<NamedGraph> named_graphs() {
  return {{"qs", qs_graph()},
          {"pascal", pascal_graph()},
          {"fig2c", fig2c_graph()},
          {"fig2r", fig2r_graph()},
          {"grid3x4", grid_graph_data(3, 4)}};
}

inline Vector unit(int n, int i) {
  Vector e(n, Scalar(0));
  e[i - 1] = 1;
  return e;
}

// q with <q, points> = K^n
inline Vector spanning_center(const Realization& g, RationalSource& r) {
  for (;;) {
    Vector q = r.nonzero_vector(g.dim);
    auto vs = g.vectors(g.point_set());
    vs.push_back(q);
    if (rank_of_vectors(vs, g.dim) == static_cast<std::size_t>(g.dim)) return q;
  }
}

// Oracle for the permanent-like sum of det: Leibniz over all permutations.
inline Scalar leibniz_det(const ScalarMatrix& a) {
  const std::size_t k = a.rows();
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  Scalar total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    Scalar prod = 1;
    for (std::size_t i = 0; i < k && !is_zero(prod); ++i) prod *= a(i, perm[i]);
    total += inversions % 2 ? Scalar(-prod) : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Sign of the permutation taking `from` to `to` (same elements).
inline int permutation_sign(const std::vector<int>& from, const std::vector<int>& to) {
  std::vector<std::size_t> pos;
  for (int x : to) pos.push_back(static_cast<std::size_t>(std::find(from.begin(), from.end(), x) - from.begin()));
  int inversions = 0;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) inversions += pos[i] > pos[j];
  return inversions % 2 ? -1 : 1;
}

}  // namespace paving::testing
