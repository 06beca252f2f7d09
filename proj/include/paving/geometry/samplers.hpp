#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "paving/geometry/realization.hpp"
#include "paving/matroid/builtin.hpp"

namespace paving {

/// Small random rationals from a seeded mt19937_64. Draws use plain modular
/// reduction so the stream is the same on every standard library.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed, int num_bound = 9, int den_bound = 4)
      : rng_(seed), num_(num_bound), den_(den_bound) {}

  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Scalar scalar() {
    Scalar s(integer(-num_, num_), integer(1, den_));
    s.canonicalize();
    return s;
  }
  Scalar nonzero() {
    for (;;) {
      Scalar s = scalar();
      if (!is_zero(s)) return s;
    }
  }
  Vector vector(int n) {
    Vector v(n);
    for (auto& x : v) x = scalar();
    return v;
  }
  Vector nonzero_vector(int n) {
    for (;;) {
      Vector v = vector(n);
      for (const auto& x : v)
        if (!is_zero(x)) return v;
    }
  }
  // random combination of basis vectors (nonzero when the basis is independent)
  Vector combination(const std::vector<Vector>& basis, int n) {
    for (;;) {
      Vector v(n, Scalar(0));
      for (const auto& b : basis) {
        Scalar c = scalar();
        for (int i = 0; i < n; ++i) v[i] += c * b[i];
      }
      for (const auto& x : v)
        if (!is_zero(x)) return v;
    }
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int num_, den_;
};

struct SamplerOptions {
  int max_attempts = 200;
};

namespace detail {

inline Vector intersect_lines(const Vector& l1, const Vector& l2) { return cross(l1, l2); }
inline Vector line_through(const Vector& a, const Vector& b) { return cross(a, b); }

inline Vector on_line(RationalSource& r, const Vector& a, const Vector& b) {
  Scalar s = r.nonzero(), t = r.nonzero();
  Vector v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = s * a[i] + t * b[i];
  return v;
}

// Same point of projective space with coprime integer coordinates; keeps
// evaluation on the integer fast path.
inline Vector primitive(Vector v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
  for (auto& x : v) {
    x *= l;
    g = gcd(g, mpz_class(x.get_num()));
  }
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline Realization make(const PavingMatroid& m, std::map<int, Vector> pts, std::uint64_t seed) {
  for (auto& [p, v] : pts) v = primitive(std::move(v));
  Realization g;
  g.dim = m.rank();
  g.points = std::move(pts);
  g.seed = seed;
  g.matroid = m.name();
  return g;
}

// Retries `build` with derived seeds until the result realizes m exactly.
template <class Build>
Realization rejection_sample(const PavingMatroid& m, std::uint64_t seed, const SamplerOptions& opts, Build&& build) {
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    RationalSource r(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
    std::optional<std::map<int, Vector>> pts = build(r);
    if (!pts) continue;
    Realization g = make(m, std::move(*pts), seed);
    if (in_realization_space(g, m)) return g;
  }
  throw ResamplingExhausted("no generic realization of " + m.name() + " after " + std::to_string(opts.max_attempts) +
                            " attempts (seed " + std::to_string(seed) + ")");
}

}  // namespace detail

/// Places points in `order`. A point must lie in every hyperplane whose
/// already placed points span n-1 dimensions; it is a random vector in the
/// intersection of those. Returns nullopt when the constraints leave only 0
/// or the result is not a realization of m.
inline std::optional<Realization> incremental_realization(const PavingMatroid& m, const std::vector<int>& order,
                                                          RationalSource& r, std::uint64_t seed = 0) {
  const int n = m.rank();
  std::map<int, Vector> pts;
  for (int p : order) {
    std::vector<Vector> normals;
    for (auto l : m.hyperplanes()) {
      if (!l.contains(p)) continue;
      std::vector<Vector> placed;
      for (int x : l)
        if (pts.count(x)) placed.push_back(pts.at(x));
      if (placed.size() < static_cast<std::size_t>(n - 1)) continue;
      ScalarMatrix a(placed.size(), n);
      for (std::size_t i = 0; i < placed.size(); ++i)
        for (int j = 0; j < n; ++j) a(i, j) = placed[i][j];
      auto ker = exact_kernel(a);
      if (ker.size() == 1) normals.push_back(ker[0]);
    }
    Vector v;
    if (normals.empty()) {
      v = r.nonzero_vector(n);
    } else {
      ScalarMatrix a(normals.size(), n);
      for (std::size_t i = 0; i < normals.size(); ++i)
        for (int j = 0; j < n; ++j) a(i, j) = normals[i][j];
      auto ker = exact_kernel(a);
      if (ker.empty()) return std::nullopt;
      v = r.combination(ker, n);
    }
    pts[p] = std::move(v);
  }
  Realization g = detail::make(m, std::move(pts), seed);
  if (!in_realization_space(g, m)) return std::nullopt;
  return g;
}

/// Experimental: incremental placement over the ascending order and then
/// random orders. No success guarantee.
inline std::optional<Realization> search_realization(const PavingMatroid& m, std::uint64_t seed, int attempts = 64) {
  std::vector<int> order = m.ground().elements();
  for (int a = 0; a < attempts; ++a) {
    RationalSource r(seed * 1000003ULL + static_cast<std::uint64_t>(a));
    if (a > 0) {
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[r.engine()() % i]);
    }
    if (auto g = incremental_realization(m, order, r, seed)) return g;
  }
  return std::nullopt;
}

/// Six pairwise intersections of four random lines A, B, C, D:
/// 1 = AD, 2 = AC, 3 = AB, 4 = BC, 5 = BD, 6 = CD.
inline Realization sample_quadrilateral(std::uint64_t seed, const SamplerOptions& opts = {}) {
  auto m = builtin::qs();
  return detail::rejection_sample(m, seed, opts, [](RationalSource& r) -> std::optional<std::map<int, Vector>> {
    Vector A = r.vector(3), B = r.vector(3), C = r.vector(3), D = r.vector(3);
    using detail::intersect_lines;
    return std::map<int, Vector>{{1, intersect_lines(A, D)}, {2, intersect_lines(A, C)}, {3, intersect_lines(A, B)},
                                 {4, intersect_lines(B, C)}, {5, intersect_lines(B, D)}, {6, intersect_lines(C, D)}};
  });
}

/// n x k grid: random row hyperplanes, column hyperplanes for the single
/// columns and one hyperplane for the merged last n-2 columns; each point is a
/// random vector in its row/column intersection.
inline Realization sample_grid(int n, int k, std::uint64_t seed, const SamplerOptions& opts = {}) {
  auto m = builtin::grid(n, k);
  if (n == 3 && k == 4) m = builtin::grid3x4();
  if (n == 3 && k == 3) m = builtin::grid3x3();
  const int single = k - (n - 2);
  return detail::rejection_sample(m, seed, opts, [&](RationalSource& r) -> std::optional<std::map<int, Vector>> {
    std::vector<Vector> rows, cols;
    for (int i = 0; i < n; ++i) rows.push_back(r.nonzero_vector(n));
    for (int j = 0; j < (n == 3 ? k : single); ++j) cols.push_back(r.nonzero_vector(n));
    Vector merged = r.nonzero_vector(n);
    std::map<int, Vector> pts;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= k; ++j) {
        const Vector& c = n > 3 && j > single ? merged : cols[j - 1];
        ScalarMatrix a(2, n);
        for (int t = 0; t < n; ++t) {
          a(0, t) = rows[i - 1][t];
          a(1, t) = c[t];
        }
        auto ker = exact_kernel(a);
        if (ker.size() != static_cast<std::size_t>(n - 2)) return std::nullopt;
        pts[builtin::grid_id(i, j, k)] = r.combination(ker, n);
      }
    return pts;
  });
}

/// Six points (t^2, t, 1) on the conic, 7 = 12.45, 8 = 23.56, 9 = 34.61.
inline Realization sample_pascal(std::uint64_t seed, const SamplerOptions& opts = {}) {
  auto m = builtin::pascal();
  return detail::rejection_sample(m, seed, opts, [](RationalSource& r) -> std::optional<std::map<int, Vector>> {
    std::map<int, Vector> pts;
    for (int p = 1; p <= 6; ++p) {
      Scalar t = r.scalar();
      pts[p] = {t * t, t, Scalar(1)};
    }
    using detail::intersect_lines;
    using detail::line_through;
    auto meet = [&](int a, int b, int c, int d) {
      return intersect_lines(line_through(pts[a], pts[b]), line_through(pts[c], pts[d]));
    };
    pts[7] = meet(1, 2, 4, 5);
    pts[8] = meet(2, 3, 5, 6);
    pts[9] = meet(3, 4, 6, 1);
    return pts;
  });
}

/// Lines 127, 347, 567 through the common point 7.
inline Realization sample_concurrent_lines(std::uint64_t seed, const SamplerOptions& opts = {}) {
  auto m = builtin::concurrent3();
  return detail::rejection_sample(m, seed, opts, [](RationalSource& r) -> std::optional<std::map<int, Vector>> {
    std::map<int, Vector> pts;
    pts[7] = r.nonzero_vector(3);
    for (int p : {1, 3, 5}) {
      pts[p] = r.nonzero_vector(3);
      pts[p + 1] = detail::on_line(r, pts[p], pts[7]);
    }
    return pts;
  });
}

inline Realization sample_fig2_center(std::uint64_t seed, const SamplerOptions& opts = {}) {
  auto m = builtin::fig2c();
  return detail::rejection_sample(m, seed, opts, [&](RationalSource& r) -> std::optional<std::map<int, Vector>> {
    auto g = incremental_realization(m, {1, 2, 4, 5, 3, 7, 6, 8}, r, seed);
    if (!g) return std::nullopt;
    return g->points;
  });
}

inline Realization sample_fig2_right(std::uint64_t seed, const SamplerOptions& opts = {}) {
  auto m = builtin::fig2r();
  return detail::rejection_sample(m, seed, opts, [&](RationalSource& r) -> std::optional<std::map<int, Vector>> {
    auto g = incremental_realization(m, {1, 2, 3, 4, 7, 5, 6}, r, seed);
    if (!g) return std::nullopt;
    return g->points;
  });
}

/// d generic vectors in K^n.
inline Realization sample_uniform(int n, int d, std::uint64_t seed, const SamplerOptions& opts = {}) {
  if (n < 2) throw ValidationError("uniform sampler needs n >= 2");
  auto m = uniform(n, d);
  return detail::rejection_sample(m, seed, opts, [&](RationalSource& r) -> std::optional<std::map<int, Vector>> {
    std::map<int, Vector> pts;
    for (int p = 1; p <= d; ++p) pts[p] = r.vector(n);
    return pts;
  });
}

/// d generic vectors inside a random hyperplane of K^n.
inline Realization sample_coplanar(int n, int d, std::uint64_t seed, const SamplerOptions& opts = {}) {
  if (n < 2) throw ValidationError("coplanar sampler needs n >= 2");
  auto m = builtin::coplanar(n, d);
  return detail::rejection_sample(m, seed, opts, [&](RationalSource& r) -> std::optional<std::map<int, Vector>> {
    Vector h = r.nonzero_vector(n);
    ScalarMatrix a(1, n);
    for (int j = 0; j < n; ++j) a(0, j) = h[j];
    auto basis = exact_kernel(a);
    std::map<int, Vector> pts;
    for (int p = 1; p <= d; ++p) pts[p] = r.combination(basis, n);
    return pts;
  });
}

/// Generic points on one line (n = 3), labelled by the matroid's ground set.
/// Lies in V_C(M) for any rank-3 M but realizes none with a non-collinear
/// basis.
inline Realization sample_collinear(const PavingMatroid& m, std::uint64_t seed) {
  if (m.rank() != 3) throw DimensionMismatch("collinear sampler is for rank 3");
  RationalSource r(seed * 1000003ULL + 17);
  Vector a, b;
  do {
    a = r.vector(3);
    b = r.vector(3);
  } while (rank_of_vectors({a, b}, 3) < 2);
  std::map<int, Vector> pts;
  for (int p : m.ground()) pts[p] = detail::on_line(r, a, b);
  return detail::make(m, std::move(pts), seed);
}

inline std::vector<std::string> family_names() {
  return {"quadrilateral", "grid3x4", "grid(n,k)", "pascal", "concurrent_lines", "fig2_center", "fig2_right", "uniform(n,d)",
          "coplanar(n,d)"};
}

/// Dispatch by family id; "qs", "concurrent3", "fig2c", "fig2r", "paving4_9"
/// (experimental search) are accepted as aliases of the matroid names.
inline Realization sample_family(const std::string& family, std::uint64_t seed, const SamplerOptions& opts = {}) {
  if (family == "quadrilateral" || family == "qs") return sample_quadrilateral(seed, opts);
  if (family == "grid3x4") return sample_grid(3, 4, seed, opts);
  if (family == "grid3x3") return sample_grid(3, 3, seed, opts);
  if (family == "pascal") return sample_pascal(seed, opts);
  if (family == "concurrent_lines" || family == "concurrent3") return sample_concurrent_lines(seed, opts);
  if (family == "fig2_center" || family == "fig2c") return sample_fig2_center(seed, opts);
  if (family == "fig2_right" || family == "fig2r") return sample_fig2_right(seed, opts);
  if (family == "paving4_9") {
    auto g = search_realization(builtin::paving4_9(), seed);
    if (!g) throw ResamplingExhausted("realization search for paving4_9 failed (seed " + std::to_string(seed) + ")");
    return *g;
  }
  auto args = [&](const std::string& prefix, int& a, int& b) {
    if (family.rfind(prefix + "(", 0) != 0 || family.back() != ')') return false;
    if (std::sscanf(family.c_str() + prefix.size(), "(%d,%d)", &a, &b) != 2) return false;
    return true;
  };
  int a = 0, b = 0;
  if (args("grid", a, b) || args("gridNxK", a, b)) return sample_grid(a, b, seed, opts);
  if (args("uniform", a, b)) return sample_uniform(a, b, seed, opts);
  if (args("coplanar", a, b)) return sample_coplanar(a, b, seed, opts);
  throw UnknownFamily("unknown sampler family: " + family);
}

}  // namespace paving
