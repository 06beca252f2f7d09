#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paving/algebra/determinant.hpp"
#include "paving/generators/extra_vector.hpp"
#include "paving/generators/liftability.hpp"
#include "paving/geometry/realization.hpp"
#include "paving/matroid/paving_matroid.hpp"

namespace paving {

/// (J, P, C) with one extra vector per circuit. An empty `extra` means
/// symbolic q1..qk; a single entry is shared by every circuit.
struct GraphData {
  PointSet J;
  std::vector<int> P;
  std::vector<PointSet> C;
  std::vector<ExtraVector> extra;

  std::size_t size() const { return P.size(); }

  std::vector<ExtraVector> extras() const {
    if (extra.empty()) {
      std::vector<ExtraVector> out;
      for (std::size_t i = 0; i < P.size(); ++i)
        out.push_back(ExtraVector::symbolic(ExtraLabel{'q', static_cast<std::uint32_t>(i + 1)}));
      return out;
    }
    if (extra.size() == 1) return std::vector<ExtraVector>(P.size(), extra[0]);
    return extra;
  }

  std::string describe() const {
    std::string out = "J=" + J.to_string() + " P=(";
    for (std::size_t i = 0; i < P.size(); ++i) out += (i ? "," : "") + std::to_string(P[i]);
    out += ") C=(";
    for (std::size_t i = 0; i < C.size(); ++i) out += (i ? "," : "") + C[i].to_string();
    out += ") extra=(";
    auto ex = extras();
    for (std::size_t i = 0; i < ex.size(); ++i) out += (i ? "," : "") + ex[i].describe();
    return out + ")";
  }
};

inline PointSet point_set_of(const std::vector<int>& ps) {
  PointSet s;
  for (int p : ps) s.insert(p);
  return s;
}

/// Throws HypothesisViolation naming the first failed invariant. Repeated
/// circuits are accepted.
inline void validate_graph_data(const PavingMatroid& m, const GraphData& g) {
  auto fail = [](const std::string& why) { throw HypothesisViolation("GraphData: " + why); };
  const int n = m.rank();
  if (g.P.empty()) fail("P is empty");
  if (g.C.size() != g.P.size()) fail("C and P differ in length");
  if (!(g.extra.empty() || g.extra.size() == 1 || g.extra.size() == g.P.size()))
    fail("extra vectors must be absent, shared, or one per circuit");
  for (const auto& q : g.extra)
    if (!q.is_symbolic() && static_cast<int>(q.coordinates().size()) != n) fail("extra vector length differs from rank");
  PointSet P;
  for (int p : g.P) {
    if (!m.ground().contains(p)) fail("point " + std::to_string(p) + " of P is not in the ground set");
    if (P.contains(p)) fail("P repeats point " + std::to_string(p));
    P.insert(p);
  }
  if (!g.J.is_subset_of(m.ground())) fail("J is not inside the ground set");
  PointSet cl = m.closure(g.J);
  if (!(P & cl).empty()) fail("P meets closure(J) in " + (P & cl).to_string());
  const auto& circuits = m.circuits_n();
  for (std::size_t i = 0; i < g.C.size(); ++i) {
    const auto& c = g.C[i];
    if (c.size() != n) fail("circuit " + c.to_string() + " does not have " + std::to_string(n) + " points");
    if (!std::binary_search(circuits.begin(), circuits.end(), c, lex_less))
      fail(c.to_string() + " is not a circuit of the matroid");
    if (!c.is_subset_of(P | g.J)) fail("circuit " + c.to_string() + " is not inside P u J");
    if (!c.contains(g.P[i])) fail("p_" + std::to_string(i + 1) + " = " + std::to_string(g.P[i]) + " is not in " + c.to_string());
  }
}

/// Weighted digraph on P. Symbolic graphs carry edges without weights.
class DependencyDigraph {
 public:
  DependencyDigraph() = default;
  DependencyDigraph(std::vector<int> vertices, bool numeric)
      : vertices_(std::move(vertices)), numeric_(numeric), w_(vertices_.size() * vertices_.size()) {}

  /// Weight matrix with zero diagonal; nonzero entries become edges.
  static DependencyDigraph from_weights(const ScalarMatrix& a) {
    if (a.rows() != a.cols()) throw NonSquare("weight matrix must be square");
    std::vector<int> vs;
    for (std::size_t i = 0; i < a.rows(); ++i) vs.push_back(static_cast<int>(i + 1));
    DependencyDigraph g(vs, true);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (i != j && !is_zero(a(i, j))) g.add_edge(i, j, a(i, j));
    return g;
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<int>& vertices() const { return vertices_; }
  bool numeric() const { return numeric_; }

  void add_edge(std::size_t i, std::size_t j, std::optional<Scalar> weight = std::nullopt) {
    if (i == j) throw Error("dependency digraph is loopless");
    if (numeric_ && (!weight || is_zero(*weight))) throw Error("numeric edges need nonzero weights");
    w_[i * size() + j] = weight ? std::optional<Scalar>(*weight) : std::optional<Scalar>(Scalar(0));
  }

  bool has_edge(std::size_t i, std::size_t j) const { return w_[i * size() + j].has_value(); }
  const Scalar& weight(std::size_t i, std::size_t j) const {
    if (!numeric_) throw Error("symbolic digraph has no numeric weights");
    return *w_[i * size() + j];
  }

  // (p_i, p_j) by point id, in row-major order
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (has_edge(i, j)) out.emplace_back(vertices_[i], vertices_[j]);
    return out;
  }

 private:
  std::vector<int> vertices_;
  bool numeric_ = false;
  std::vector<std::optional<Scalar>> w_;
};

/// Symbolic mode: edge p_i -> p_j whenever p_j is in c_i.
inline DependencyDigraph build_graph(const PavingMatroid& m, const GraphData& g) {
  validate_graph_data(m, g);
  DependencyDigraph d(g.P, false);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && g.C[i].contains(g.P[j])) d.add_edge(i, j);
  return d;
}

/// Numeric mode: alpha_ij from the circuit dependency at gamma, with the
/// extra vectors (which must be concrete) spanning the quotient. Zero
/// weights are dropped.
inline DependencyDigraph build_graph(const PavingMatroid& m, const GraphData& g, const Realization& gamma) {
  validate_graph_data(m, g);
  check_indexed(gamma, m);
  const int n = m.rank();
  auto ex = g.extras();
  Assignment a = assignment_for(gamma);
  DependencyDigraph d(g.P, true);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (ex[i].is_symbolic()) throw HypothesisViolation("numeric digraph needs concrete extra vectors");
    auto row = liftability_row(g.C[i], ex[i], n);
    std::vector<int> c = g.C[i].elements();
    auto pos = [&](int p) { return static_cast<std::size_t>(std::find(c.begin(), c.end(), p) - c.begin()); };
    Scalar den = row[pos(g.P[i])].evaluate(a);
    if (is_zero(den)) throw HypothesisViolation("extra vector lies in the span of circuit " + g.C[i].to_string());
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j || !g.C[i].contains(g.P[j])) continue;
      Scalar w = -row[pos(g.P[j])].evaluate(a) / den;
      if (!is_zero(w)) d.add_edge(i, j, w);
    }
  }
  return d;
}

using Cycle = std::vector<std::size_t>;  // vertex indices, smallest first
using CycleCollection = std::vector<Cycle>;

struct CycleOptions {
  std::size_t max_cycles = 20000;
  std::size_t max_collections = 200000;
};

/// Simple directed cycles, each rotated to start at its smallest vertex,
/// sorted by length then lexicographically.
inline std::vector<Cycle> simple_cycles(const DependencyDigraph& g, const CycleOptions& opts = {}) {
  std::vector<Cycle> out;
  const std::size_t k = g.size();
  std::vector<bool> on_path(k, false);
  Cycle path;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t s, std::size_t v) {
    for (std::size_t w = s; w < k; ++w) {
      if (!g.has_edge(v, w)) continue;
      if (w == s) {
        out.push_back(path);
        if (out.size() > opts.max_cycles) throw TooLarge("cycle enumeration budget exceeded");
      } else if (!on_path[w]) {
        on_path[w] = true;
        path.push_back(w);
        dfs(s, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < k; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Nonempty sets of pairwise vertex-disjoint cycles, in lexicographic order
/// of cycle indices.
inline std::vector<CycleCollection> cycle_collections(const DependencyDigraph& g, const CycleOptions& opts = {}) {
  auto cycles = simple_cycles(g, opts);
  std::vector<std::uint64_t> masks;
  for (const auto& c : cycles) {
    std::uint64_t mk = 0;
    for (auto v : c) mk |= std::uint64_t(1) << v;
    masks.push_back(mk);
  }
  std::vector<CycleCollection> out;
  CycleCollection cur;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t used) {
    for (std::size_t i = from; i < cycles.size(); ++i) {
      if (masks[i] & used) continue;
      cur.push_back(cycles[i]);
      out.push_back(cur);
      if (out.size() > opts.max_collections) throw TooLarge("cycle-collection budget exceeded");
      rec(i + 1, used | masks[i]);
      cur.pop_back();
    }
  };
  if (g.size() > 64) throw TooLarge("digraph too large for cycle enumeration");
  rec(0, 0);
  return out;
}

/// 1 + sum over collections K of (-1)^|K| times the product of edge weights.
inline Scalar cycle_identity_value(const DependencyDigraph& g, const CycleOptions& opts = {}) {
  if (!g.numeric()) throw Error("cycle identity needs numeric weights");
  Scalar total = 1;
  for (const auto& coll : cycle_collections(g, opts)) {
    Scalar prod = coll.size() % 2 ? -1 : 1;
    for (const auto& c : coll)
      for (std::size_t t = 0; t < c.size(); ++t) prod *= g.weight(c[t], c[(t + 1) % c.size()]);
    total += prod;
  }
  return total;
}

}  // namespace paving
