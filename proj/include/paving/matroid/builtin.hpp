#pragma once

#include <string>
#include <vector>

#include "paving/matroid/paving_matroid.hpp"

namespace paving::builtin {

// Quadrilateral set: 4 lines, 6 pairwise intersections.
inline PavingMatroid qs() { return PavingMatroid::validate(3, 6, {{1, 2, 3}, {3, 4, 5}, {2, 4, 6}, {1, 5, 6}}, "qs"); }

inline PavingMatroid concurrent3() {
  return PavingMatroid::validate(3, 7, {{1, 2, 7}, {3, 4, 7}, {5, 6, 7}}, "concurrent3");
}

// Hexagon 1..6 on a conic; 7 = 12.45, 8 = 23.56, 9 = 34.61, and the Pascal line 789.
inline PavingMatroid pascal() {
  return PavingMatroid::validate(
      3, 9, {{1, 2, 7}, {4, 5, 7}, {2, 3, 8}, {5, 6, 8}, {3, 4, 9}, {1, 6, 9}, {7, 8, 9}}, "pascal");
}

inline PavingMatroid fig2c() {
  return PavingMatroid::validate(3, 8, {{1, 2, 3}, {2, 5, 7}, {1, 5, 6}, {1, 4, 8}, {3, 4, 7}, {6, 7, 8}}, "fig2c");
}

inline PavingMatroid fig2r() {
  return PavingMatroid::validate(3, 7, {{1, 4, 7}, {1, 2, 5}, {1, 3, 6}, {2, 3, 4}, {5, 6, 7}}, "fig2r");
}

inline PavingMatroid paving4_9() {
  return PavingMatroid::validate(
      4, 9, {{1, 2, 3, 4}, {2, 5, 6, 7}, {3, 5, 8, 9}, {4, 5, 6, 8}, {1, 5, 7, 9}, {6, 7, 8, 9}}, "paving4_9");
}

// Point p_ij has id (i-1)*k + j.
inline int grid_id(int i, int j, int k) { return (i - 1) * k + j; }

/// n x k grid in rank n: rows of k points, columns of n points, and the last
/// n-2 columns merged into one hyperplane (for n = 3 that is just the last
/// column).
inline PavingMatroid grid(int n, int k) {
  if (n < 3 || k < n) throw ValidationError("grid needs n >= 3 and k >= n");
  if (n * k > PointSet::kMaxPoint) throw TooLarge("grid too large");
  std::vector<PointSet> hs;
  for (int i = 1; i <= n; ++i) {
    PointSet row;
    for (int j = 1; j <= k; ++j) row.insert(grid_id(i, j, k));
    hs.push_back(row);
  }
  int single = k - (n - 2);
  for (int j = 1; j <= single; ++j) {
    PointSet col;
    for (int i = 1; i <= n; ++i) col.insert(grid_id(i, j, k));
    hs.push_back(col);
  }
  if (n > 3) {
    PointSet last;
    for (int j = single + 1; j <= k; ++j)
      for (int i = 1; i <= n; ++i) last.insert(grid_id(i, j, k));
    hs.push_back(last);
  } else {
    PointSet col;
    for (int i = 1; i <= n; ++i) col.insert(grid_id(i, k, k));
    hs.push_back(col);
  }
  return PavingMatroid::validate(n, n * k, hs, "grid(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

inline PavingMatroid grid3x4() {
  auto m = grid(3, 4);
  return PavingMatroid::validate(3, 12, m.hyperplanes(), "grid3x4");
}

inline PavingMatroid grid3x3() {
  auto m = grid(3, 3);
  return PavingMatroid::validate(3, 9, m.hyperplanes(), "grid3x3");
}

/// U_{n-1,d} seen inside C^n: one hyperplane holding every point, so the
/// n-circuits are all n-subsets.
inline PavingMatroid coplanar(int n, int d) {
  return PavingMatroid::validate(n, d, {PointSet::range(1, d)},
                                 "coplanar(" + std::to_string(n) + "," + std::to_string(d) + ")");
}

inline std::vector<std::string> names() {
  return {"qs", "concurrent3", "pascal", "fig2c", "fig2r", "paving4_9", "grid3x3", "grid3x4"};
}

/// Named matroids plus "uniform(n,d)", "grid(n,k)" and "coplanar(n,d)".
inline PavingMatroid by_name(const std::string& name) {
  if (name == "qs") return qs();
  if (name == "concurrent3") return concurrent3();
  if (name == "pascal") return pascal();
  if (name == "fig2c") return fig2c();
  if (name == "fig2r") return fig2r();
  if (name == "paving4_9") return paving4_9();
  if (name == "grid3x3") return grid3x3();
  if (name == "grid3x4") return grid3x4();
  auto two_args = [&](const std::string& prefix, int& a, int& b) {
    if (name.rfind(prefix + "(", 0) != 0 || name.back() != ')') return false;
    std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string::npos) return false;
    try {
      std::size_t used = 0;
      a = std::stoi(inner.substr(0, comma), &used);
      if (used != comma) return false;
      std::string rest = inner.substr(comma + 1);
      b = std::stoi(rest, &used);
      return used == rest.size();
    } catch (const std::exception&) {
      return false;
    }
  };
  int a = 0, b = 0;
  if (two_args("uniform", a, b)) return uniform(a, b);
  if (two_args("grid", a, b)) return grid(a, b);
  if (two_args("coplanar", a, b)) return coplanar(a, b);
  throw UnknownFamily("unknown matroid name: " + name);
}

}  // namespace paving::builtin
