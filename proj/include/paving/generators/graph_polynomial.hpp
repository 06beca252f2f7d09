#pragma once

#include <optional>
#include <vector>

#include "paving/generators/bracket_form.hpp"
#include "paving/generators/graph.hpp"

namespace paving {

struct GraphOptions {
  bool validate = true;
  DeterminantOptions determinant;
  CycleOptions cycles;
  ExpandOptions expand;
};

/// k x k matrix N: rows are the circuits c_i with their own extra vector q_i,
/// columns are P, entries follow the liftability-row pattern.
inline PolyMatrix graph_matrix(const PavingMatroid& m, const GraphData& g, const GraphOptions& opts = {}) {
  if (opts.validate) validate_graph_data(m, g);
  const int n = m.rank();
  const std::size_t k = g.size();
  auto ex = g.extras();
  PolyMatrix N(k, k);
  std::vector<std::string> rl, cl;
  for (std::size_t i = 0; i < k; ++i) {
    auto row = liftability_row(g.C[i], ex[i], n);
    std::vector<int> c = g.C[i].elements();
    for (std::size_t j = 0; j < k; ++j) {
      auto it = std::find(c.begin(), c.end(), g.P[j]);
      if (it != c.end()) N(i, j) = row[it - c.begin()];
    }
    rl.push_back("c" + std::to_string(i + 1) + "=" + g.C[i].to_string());
    cl.push_back(std::to_string(g.P[i]));
  }
  N.set_row_labels(rl);
  N.set_col_labels(cl);
  return N;
}

/// Bracket-level liftability row of an ascending circuit.
inline std::vector<BracketForm> liftability_row_brackets(PointSet circuit, const ExtraVector& q) {
  std::vector<int> c = circuit.elements();
  std::vector<BracketForm> out;
  for (std::size_t s = 0; s < c.size(); ++s) {
    std::vector<int> rest;
    for (std::size_t t = 0; t < c.size(); ++t)
      if (t != s) rest.push_back(c[t]);
    BracketForm b = point_sym_bracket(rest, q);
    out.push_back(s % 2 ? -b : b);
  }
  return out;
}

/// N with bracket atoms as entries.
inline Matrix<BracketForm> graph_bracket_matrix(const PavingMatroid& m, const GraphData& g, const GraphOptions& opts = {}) {
  if (opts.validate) validate_graph_data(m, g);
  const std::size_t k = g.size();
  auto ex = g.extras();
  Matrix<BracketForm> N(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto row = liftability_row_brackets(g.C[i], ex[i]);
    std::vector<int> c = g.C[i].elements();
    for (std::size_t j = 0; j < k; ++j) {
      auto it = std::find(c.begin(), c.end(), g.P[j]);
      if (it != c.end()) N(i, j) = row[it - c.begin()];
    }
  }
  return N;
}

/// det N in bracket atoms. Needs symbolic or canonical extra vectors.
inline BracketForm graph_bracket_polynomial(const PavingMatroid& m, const GraphData& g, const GraphOptions& opts = {}) {
  return determinant(graph_bracket_matrix(m, g, opts), opts.determinant);
}

namespace detail {

inline bool bracket_representable(const GraphData& g) {
  for (const auto& q : g.extras()) {
    try {
      ColumnRef::of(q);
    } catch (const HypothesisViolation&) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// det N as a coordinate polynomial; a member of the graph ideal. Computed
/// through the bracket form when the extra vectors allow it.
inline Polynomial graph_polynomial(const PavingMatroid& m, const GraphData& g, const GraphOptions& opts = {}) {
  if (detail::bracket_representable(g)) return expand(graph_bracket_polynomial(m, g, opts), m.rank(), opts.expand);
  return determinant(graph_matrix(m, g, opts), opts.determinant);
}

/// Per-row quotient choice for the cycle route: nullopt uses the row's extra
/// vector; a hyperplane l2 uses brackets with points of l2 instead (only for
/// circuits with exactly two points of P).
struct QuotientStrategy {
  std::vector<std::optional<PointSet>> rows;
};

namespace detail {

// alpha_ij = num_ij / den_i for one row of the cycle route.
struct RowQuotient {
  BracketForm den;
  std::vector<std::optional<BracketForm>> num;  // indexed by j
};

// Circuit reordered as (p_i, rest ascending); with c' that order,
// alpha = (-1)^pos [c' minus c'_pos, q] / [c' minus p_i, q], pos 1-based >= 2.
inline RowQuotient extra_vector_quotient(const GraphData& g, std::size_t i, const ExtraVector& q) {
  std::vector<int> order{g.P[i]};
  for (int p : g.C[i])
    if (p != g.P[i]) order.push_back(p);
  auto drop = [&](std::size_t pos) {
    std::vector<int> rest;
    for (std::size_t t = 0; t < order.size(); ++t)
      if (t != pos) rest.push_back(order[t]);
    return point_sym_bracket(rest, q);
  };
  RowQuotient rq;
  rq.den = drop(0);
  rq.num.resize(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (j == i) continue;
    auto it = std::find(order.begin(), order.end(), g.P[j]);
    if (it == order.end()) continue;
    std::size_t pos = it - order.begin();  // 0-based, so pos+1 is the 1-based index
    BracketForm b = drop(pos);
    rq.num[j] = (pos + 1) % 2 ? -b : b;
  }
  return rq;
}

// Second-hyperplane quotient: c_i = {p_i, p_j} u S with S = c_i n l2 of size
// n-2. The functional v -> [v, S', r1, r2] (S' = S without its first point,
// r1 < r2 the two smallest points of l2 outside c_i) kills S, so
// alpha = [p_i, S', r1, r2] / [p_j, S', r1, r2].
inline RowQuotient hyperplane_quotient(const PavingMatroid& m, const GraphData& g, std::size_t i, PointSet l2) {
  const int n = m.rank();
  PointSet P = point_set_of(g.P);
  PointSet inP = g.C[i] & P;
  if (inP.size() != 2) throw HypothesisViolation("hyperplane quotient needs a circuit with exactly two points of P");
  bool known = false;
  for (auto l : m.hyperplanes()) known = known || l == l2;
  if (!known) throw HypothesisViolation("quotient hyperplane " + l2.to_string() + " is not a hyperplane");
  PointSet S = g.C[i] & l2;
  if (S.size() != n - 2 || !(S & P).empty())
    throw HypothesisViolation("quotient hyperplane must meet the circuit in n-2 points outside P");
  std::vector<int> others = (l2 - g.C[i]).elements();
  if (others.size() < 2) throw HypothesisViolation("quotient hyperplane has fewer than two points off the circuit");
  std::vector<int> tail;
  bool first = true;
  for (int s : S) {
    if (first) {
      first = false;
      continue;
    }
    tail.push_back(s);
  }
  tail.push_back(others[0]);
  tail.push_back(others[1]);
  auto functional = [&](int p) {
    std::vector<ColumnRef> cols{ColumnRef::point(p)};
    for (int t : tail) cols.push_back(ColumnRef::point(t));
    return sym_bracket(cols);
  };
  int pj = (inP - PointSet{g.P[i]}).min();
  RowQuotient rq;
  rq.num.resize(g.size());
  rq.den = functional(pj);
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g.P[j] == pj) rq.num[j] = functional(g.P[i]);
  return rq;
}

}  // namespace detail

/// Cycle route in bracket atoms: sum over K in C(G) u {empty} of
/// (-1)^|K| prod_{edges} num times prod_{i not covered} den_i, i.e. the cycle
/// identity with denominators cleared. With the default quotients this equals
/// graph_bracket_polynomial up to a unit already at the bracket level.
inline BracketForm graph_bracket_polynomial_via_cycles(const PavingMatroid& m, const GraphData& g,
                                                       const QuotientStrategy& strategy = {}, const GraphOptions& opts = {}) {
  if (opts.validate) validate_graph_data(m, g);
  const std::size_t k = g.size();
  if (!strategy.rows.empty() && strategy.rows.size() != k) throw HypothesisViolation("quotient strategy length differs from k");
  auto ex = g.extras();
  std::vector<detail::RowQuotient> rows;
  for (std::size_t i = 0; i < k; ++i) {
    if (!strategy.rows.empty() && strategy.rows[i])
      rows.push_back(detail::hyperplane_quotient(m, g, i, *strategy.rows[i]));
    else
      rows.push_back(detail::extra_vector_quotient(g, i, ex[i]));
  }
  DependencyDigraph d(g.P, false);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (rows[i].num[j]) d.add_edge(i, j);
  auto uncovered_product = [&](std::uint64_t covered) {
    BracketForm p(1);
    for (std::size_t i = 0; i < k; ++i)
      if (!((covered >> i) & 1u)) p *= rows[i].den;
    return p;
  };
  BracketForm total = uncovered_product(0);
  for (const auto& coll : cycle_collections(d, opts.cycles)) {
    BracketForm term(coll.size() % 2 ? -1 : 1);
    std::uint64_t covered = 0;
    for (const auto& c : coll)
      for (std::size_t t = 0; t < c.size(); ++t) {
        term *= *rows[c[t]].num[c[(t + 1) % c.size()]];
        covered |= std::uint64_t(1) << c[t];
      }
    total += term * uncovered_product(covered);
  }
  return total;
}

/// Coordinate expansion of the cycle route. Equal to graph_polynomial up to
/// a unit for the default quotients. Second-hyperplane quotients agree with
/// the default ones only on realizations, so they give another polynomial
/// that vanishes there.
inline Polynomial graph_polynomial_via_cycles(const PavingMatroid& m, const GraphData& g, const QuotientStrategy& strategy = {},
                                              const GraphOptions& opts = {}) {
  return expand(graph_bracket_polynomial_via_cycles(m, g, strategy, opts), m.rank(), opts.expand);
}

}  // namespace paving
