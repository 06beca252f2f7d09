#pragma once

#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "paving/gc/formal.hpp"
#include "paving/generators/graph_polynomial.hpp"
#include "paving/generators/liftability.hpp"
#include "paving/matroid/builtin.hpp"

namespace paving {

enum class ExtraMode { symbolic, canonical };

struct FamilyOptions {
  std::size_t max_k = 6;
  std::size_t max_graph_data = 256;
  std::size_t max_polynomials = 20000;
  bool complement_only = true;  // P = ground \ closure(J); otherwise every subset of it
  ExtraMode extra = ExtraMode::canonical;
  std::uint64_t max_sweep = 81;  // canonical assignments per (J, P, C)
  unsigned threads = 1;
};

struct FamilyEmission : Emission {
  bool degree_warning = false;  // max_degree > 2: outside the finiteness hypothesis
};

/// Admissible (J, P, C) without extra vectors, in deterministic order:
/// J closed by (size, lex), P ascending, C as a product of the circuits
/// through each p_i with distinct circuits only.
inline std::vector<GraphData> admissible_graph_data(const PavingMatroid& m, const FamilyOptions& opts, bool* truncated = nullptr) {
  std::vector<GraphData> out;
  std::vector<PointSet> closed;
  for (int s = 0; s <= m.size(); ++s)
    for_each_subset(m.ground(), s, [&](PointSet j) {
      if (m.rank_of(j) < m.rank() && m.is_closed(j)) closed.push_back(j);
    });
  const auto& circuits = m.circuits_n();
  bool cut = false;
  for (auto J : closed) {
    PointSet free = m.ground() - J;
    std::vector<PointSet> ps;
    if (opts.complement_only) {
      ps.push_back(free);
    } else {
      for (int s = 2; s <= free.size(); ++s) for_each_subset(free, s, [&](PointSet p) { ps.push_back(p); });
    }
    for (auto P : ps) {
      if (P.empty() || static_cast<std::size_t>(P.size()) > opts.max_k) continue;
      if (static_cast<std::size_t>(P.size()) > circuits.size()) continue;
      std::vector<int> pv = P.elements();
      std::vector<std::vector<PointSet>> options;
      bool possible = true;
      for (int p : pv) {
        std::vector<PointSet> through;
        for (auto c : circuits)
          if (c.contains(p) && c.is_subset_of(P | J)) through.push_back(c);
        if (through.empty()) possible = false;
        options.push_back(std::move(through));
      }
      if (!possible) continue;
      std::vector<PointSet> chosen;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (cut) return;
        if (i == pv.size()) {
          if (out.size() >= opts.max_graph_data) {
            cut = true;
            return;
          }
          out.push_back(GraphData{J, pv, chosen, {}});
          return;
        }
        for (auto c : options[i]) {
          if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
          chosen.push_back(c);
          rec(i + 1);
          chosen.pop_back();
        }
      };
      rec(0);
      if (cut) break;
    }
    if (cut) break;
  }
  if (truncated) *truncated = cut;
  return out;
}

/// Circuit polynomials plus graph polynomials over admissible (J, P, C),
/// each extra vector swept over e_1..e_n (or symbolic), deduplicated up to
/// sign. Zero polynomials are dropped.
inline FamilyEmission finite_generating_family(const PavingMatroid& m, const FamilyOptions& opts = {}) {
  FamilyEmission em;
  em.degree_warning = m.max_degree() > 2;
  if (em.degree_warning) em.notes.push_back("max degree " + std::to_string(m.max_degree()) + " > 2: finiteness hypothesis fails");
  std::unordered_multimap<std::size_t, std::size_t> seen;  // hash of the sign-normalized form -> index
  auto push = [&](LabeledPolynomial lp) {
    if (lp.polynomial.is_zero()) return;
    Polynomial key = sign_normalized(lp.polynomial);
    std::size_t h = hash_value(key);
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (sign_normalized(em.polynomials[it->second].polynomial) == key) return;
    seen.emplace(h, em.polynomials.size());
    em.polynomials.push_back(std::move(lp));
  };
  for (auto& lp : circuit_polynomials(m)) push(std::move(lp));

  bool cut = false, sampled = false;
  auto base = admissible_graph_data(m, opts, &cut);
  const int n = m.rank();
  std::vector<GraphData> tasks;
  for (const auto& g : base) {
    if (opts.extra == ExtraMode::symbolic) {
      tasks.push_back(g);
    } else {
      // n^k assignments; above max_sweep take evenly spaced ones
      mpz_class total;
      mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(g.size()));
      std::uint64_t count = total > opts.max_sweep ? opts.max_sweep : total.get_ui();
      if (total > count) sampled = true;
      for (std::uint64_t t = 0; t < count; ++t) {
        if (tasks.size() >= opts.max_polynomials) {
          cut = true;
          break;
        }
        mpz_class code = mpz_class(static_cast<unsigned long>(t)) * total / static_cast<unsigned long>(count);
        GraphData task = g;
        std::vector<int> idx(g.size(), 1);
        for (std::size_t i = g.size(); i-- > 0; code /= n) idx[i] = 1 + static_cast<int>(mpz_class(code % n).get_si());
        for (int i : idx) task.extra.push_back(ExtraVector::canonical(n, i));
        tasks.push_back(std::move(task));
      }
    }
    if (tasks.size() >= opts.max_polynomials) {
      cut = cut || &g != &base.back();
      break;
    }
  }
  GraphOptions gopts;
  gopts.validate = true;
  auto polys = parallel_map<Polynomial>(tasks.size(), opts.threads,
                                        [&](std::size_t i) { return graph_polynomial(m, tasks[i], gopts); });
  for (std::size_t i = 0; i < tasks.size(); ++i) push({"graph " + tasks[i].describe(), std::move(polys[i])});
  if (sampled) em.notes.push_back("canonical extra vectors sampled: at most " + std::to_string(opts.max_sweep) + " of n^k per graph data");
  if (cut) {
    em.truncated = true;
    em.notes.push_back("graph-data enumeration truncated by budget");
  }
  return em;
}

struct LabeledBracketForm {
  std::string source;
  BracketForm form;
};

/// Lifting minors of one submatroid kept in bracket atoms. Same minors and
/// labels as lifting_polynomials, but cheap enough for larger minor sizes;
/// evaluate them with evaluate(form, gamma, extras).
inline std::vector<LabeledBracketForm> lifting_bracket_minors(const Submatroid& sub, const ExtraVector& q,
                                                              const LiftingOptions& opts, bool* truncated = nullptr) {
  std::vector<LabeledBracketForm> out;
  if (!sub.full_rank())
    throw NotFullRank("submatroid on " + sub.points.to_string() + " has rank " + std::to_string(sub.rank));
  const int n = sub.parent_rank;
  const long s = static_cast<long>(sub.points.size()) - n + 1;
  auto circuits = sub.circuits_n();
  if (s <= 0 || s > static_cast<long>(circuits.size()) || s > sub.points.size()) return out;
  if (static_cast<std::size_t>(s) > opts.max_minor_size) {
    if (truncated) *truncated = true;
    return out;
  }
  Matrix<BracketForm> mat(circuits.size(), sub.points.size());
  for (std::size_t r = 0; r < circuits.size(); ++r) {
    auto row = liftability_row_brackets(circuits[r], q);
    int t = 0;
    for (int p : circuits[r]) mat(r, sub.points.index_of(p)) = row[t++];
  }
  const std::string tag = "N=" + sub.points.to_string();
  std::vector<int> pts = sub.points.elements();
  MinorExpander<BracketForm> ex(mat);
  for (const auto& rs : combinations(mat.rows(), s)) {
    std::string rows_label = "[";
    for (std::size_t i = 0; i < rs.size(); ++i) rows_label += (i ? "," : "") + circuits[rs[i]].to_string();
    rows_label += "]";
    for (const auto& cs : combinations(mat.cols(), s)) {
      if (out.size() >= opts.max_minors) {
        if (truncated) *truncated = true;
        return out;
      }
      BracketForm f = ex.minor(rs, cs);
      if (f.is_zero() && !opts.keep_zero) continue;
      PointSet cols;
      for (auto c : cs) cols.insert(pts[c]);
      out.push_back({"lifting-minor " + tag + " rows=" + rows_label + " cols=" + cols.to_string() + " q=" + q.describe(),
                     std::move(f)});
    }
  }
  return out;
}

/// ((34) meet (12)) join 56 in dimension 3: the concurrency condition of
/// the lines 12, 34, 56.
inline BracketPolynomial concurrent_lines_brackets() {
  auto x = meet(FormalExtensor::word(3, {3, 4}), FormalExtensor::word(3, {1, 2}));
  return join(x, FormalExtensor::word(3, {5, 6})).brackets();
}

/// (12 meet 45) join (23 meet 56) join (34 meet 61): collinearity of the
/// three Pascal points, a quartic in brackets.
inline BracketPolynomial pascal_gc_quartic_brackets() {
  auto w = [](int a, int b) { return FormalExtensor::word(3, {a, b}); };
  auto x1 = meet(w(1, 2), w(4, 5));
  auto x2 = meet(w(2, 3), w(5, 6));
  auto x3 = meet(w(3, 4), w(6, 1));
  return join(join(x1, x2), x3).brackets();
}

inline Polynomial pascal_gc_quartic() { return expand_brackets(pascal_gc_quartic_brackets(), 3); }

/// The two-term cycle polynomial for d+4 points in P^d, in bracket atoms. I
/// is an ordered 6-tuple from [d+4]; H is the complement. x_a are formal
/// columns x1..x3, the extra vectors of the three short circuits are r, s, t
/// (indices 1..d-1) and those of the long ones are q1..q3.
inline BracketForm rnc_polynomial(int d, const std::vector<int>& I) {
  if (d < 2) throw BadIndexSet("rnc polynomial needs d >= 2");
  if (I.size() != 6) throw BadIndexSet("index set must have six entries");
  std::set<int> uniq(I.begin(), I.end());
  if (uniq.size() != 6) throw BadIndexSet("index set has repeated entries");
  for (int i : I)
    if (i < 1 || i > d + 4) throw BadIndexSet("index " + std::to_string(i) + " outside 1.." + std::to_string(d + 4));
  std::vector<int> H;
  for (int j = 1; j <= d + 4; ++j)
    if (!uniq.count(j)) H.push_back(j);
  auto x = [](int a) { return ColumnRef::extra(ExtraLabel{'x', std::uint32_t(a)}); };
  const char rletter[3] = {'r', 's', 't'};
  auto short_bracket = [&](int p, int a) {
    std::vector<ColumnRef> cols{ColumnRef::point(p), x(a)};
    for (int j = 1; j <= d - 1; ++j) cols.push_back(ColumnRef::extra(ExtraLabel{rletter[a - 1], std::uint32_t(j)}));
    return sym_bracket(cols);
  };
  auto long_bracket = [&](int p, int a) {
    std::vector<ColumnRef> cols{ColumnRef::point(p), x(a)};
    for (int h : H) cols.push_back(ColumnRef::point(h));
    cols.push_back(ColumnRef::extra(ExtraLabel{'q', std::uint32_t(a)}));
    return sym_bracket(cols);
  };
  auto at = [&](int k) { return I[(k - 1) % 6]; };  // 1-based cyclic access
  BracketForm first(1), second(1);
  for (int a = 1; a <= 3; ++a) {
    first *= short_bracket(at(a), a);
    second *= short_bracket(at(a + 1), a);
  }
  for (int a = 1; a <= 3; ++a) {
    first *= long_bracket(at(a + 3), a);
    second *= long_bracket(at(a + 4), a);
  }
  return first - second;
}

/// Renames columns bracket by bracket, re-sorting each bracket with its sign.
template <class Fn>
BracketForm rename_columns(const BracketForm& f, Fn&& fn) {
  BracketForm out;
  for (const auto& t : f.terms()) {
    BracketForm prod(t.coefficient);
    for (const auto& [b, e] : t.monomial.factors()) {
      std::vector<ColumnRef> cols;
      for (const auto& c : b.cols) cols.push_back(fn(c));
      BracketForm nb = sym_bracket(cols);
      for (unsigned k = 0; k < e; ++k) prod *= nb;
    }
    out += prod;
  }
  return out;
}

/// Grid GraphData: J is the last n-2 columns, D the diagonal p_11..p_nn.
/// A diagonal point uses its column with extra vector q_{n+j}; any other
/// p_ij uses {p_ij, p_ii, last n-2 points of row i} with q_i.
inline GraphData grid_graph_data(int n, int k) {
  if (k < 2 * n - 2) throw HypothesisViolation("grid graph data needs k >= 2n-2");
  GraphData g;
  const int free_cols = k - n + 2;
  for (int i = 1; i <= n; ++i)
    for (int j = free_cols + 1; j <= k; ++j) g.J.insert(builtin::grid_id(i, j, k));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= free_cols; ++j) {
      int p = builtin::grid_id(i, j, k);
      g.P.push_back(p);
      PointSet c;
      std::uint32_t q;
      if (i == j) {
        for (int r = 1; r <= n; ++r) c.insert(builtin::grid_id(r, j, k));
        q = static_cast<std::uint32_t>(n + j);
      } else {
        c.insert(p);
        c.insert(builtin::grid_id(i, i, k));
        for (int t = free_cols + 1; t <= k; ++t) c.insert(builtin::grid_id(i, t, k));
        q = static_cast<std::uint32_t>(i);
      }
      g.C.push_back(c);
      g.extra.push_back(ExtraVector::symbolic(ExtraLabel{'q', q}));
    }
  return g;
}

}  // namespace paving
