// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"

using namespace paving;
using namespace paving::testing;

namespace {

// FNV-1a over every artifact a criterion produces
class Digest {
 public:
  void add(const std::string& s) {
    for (unsigned char c : s) h_ = (h_ ^ c) * 1099511628211ULL;
    h_ = (h_ ^ 0xff) * 1099511628211ULL;
  }
  void add(const Scalar& s) { add(to_string(s)); }
  void add(const Polynomial& p) { add(std::to_string(p.size()) + ":" + std::to_string(hash_value(p))); }
  void add(const BracketForm& f) { add(f.to_string()); }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 1469598103934665603ULL;
};

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Criterion = std::function<Outcome(unsigned threads, Digest&)>;

// ---- 1: cycle identity ----

Outcome cycle_identity(unsigned, Digest& d) {
  Outcome out;
  for (std::uint64_t seed = 1; seed <= 200 && out.pass; ++seed) {
    RationalSource r(seed);
    const int k = 1 + static_cast<int>(seed % 7);
    ScalarMatrix a(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j && r.integer(0, 1)) a(i, j) = r.nonzero();
    ScalarMatrix ia(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) ia(i, j) = Scalar(i == j ? 1 : 0) - a(i, j);
    Scalar want = leibniz_det(ia);
    Scalar got = cycle_identity_value(DependencyDigraph::from_weights(a));
    d.add(got);
    if (got != want) out.fail("seed " + std::to_string(seed) + ": " + to_string(got) + " != det(I-A) = " + to_string(want));
  }
  // v_i = sum_j alpha_ij v_j from kernel vectors of [v_1 .. v_k]
  for (std::uint64_t seed = 1; seed <= 100 && out.pass; ++seed) {
    RationalSource r(1000 + seed);
    const int n = 3 + static_cast<int>(seed % 3);
    const int k = n + 1 + static_cast<int>(seed % 2);
    std::vector<Vector> vs;
    for (int i = 0; i < k; ++i) vs.push_back(r.nonzero_vector(n));
    auto ker = exact_kernel(matrix_from_columns(vs, n));
    ScalarMatrix a(k, k);
    for (int i = 0; i < k; ++i) {
      Vector x;
      do x = r.combination(ker, k);
      while (is_zero(x[i]));
      for (int j = 0; j < k; ++j)
        if (j != i) a(i, j) = -x[j] / x[i];
    }
    for (int i = 0; i < k; ++i) {
      Vector lhs = vs[i];
      for (int j = 0; j < k; ++j)
        for (int t = 0; t < n; ++t) lhs[t] -= a(i, j) * vs[j][t];
      for (const auto& x : lhs)
        if (!is_zero(x)) out.fail("dependency construction broken at seed " + std::to_string(seed));
    }
    Scalar got = cycle_identity_value(DependencyDigraph::from_weights(a));
    d.add(got);
    if (!is_zero(got)) out.fail("dependency seed " + std::to_string(seed) + " gives " + to_string(got));
  }
  if (out.pass) out.detail = "200 random digraphs match det(I-A); 100 dependency weight sets give 0";
  return out;
}

// ---- 2: determinant vs cycle route ----

Outcome det_vs_cycles(unsigned, Digest& d) {
  Outcome out;
  for (const auto& [name, g] : named_graphs()) {
    auto m = builtin::by_name(name);
    Scalar unit;
    bool ok;
    if (name == "grid3x4") {
      auto a = graph_bracket_polynomial(m, g), b = graph_bracket_polynomial_via_cycles(m, g);
      ok = equal_up_to_unit(a, b, &unit);
      d.add(a);
    } else {
      auto a = graph_polynomial(m, g), b = graph_polynomial_via_cycles(m, g);
      ok = equal_up_to_unit(a, b, &unit);
      d.add(a);
    }
    d.add(unit);
    if (!ok) out.fail(name + ": det and cycle route differ");
  }
  std::vector<std::pair<PavingMatroid, GraphData>> pool;
  FamilyOptions fo;
  fo.max_k = 5;
  fo.complement_only = false;
  fo.max_graph_data = 5000;
  for (const auto& name : {"qs", "concurrent3", "fig2r", "fig2c", "pascal", "grid3x3", "paving4_9"}) {
    auto m = builtin::by_name(name);
    for (auto& g : admissible_graph_data(m, fo)) pool.emplace_back(m, std::move(g));
  }
  std::mt19937_64 rng(20240611);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < 50 && i < pool.size() && out.pass; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
    const auto& [m, g] = pool[i];
    Scalar unit;
    bool ok;
    if (m.rank() == 3) {
      auto a = graph_polynomial(m, g), b = graph_polynomial_via_cycles(m, g);
      ok = equal_up_to_unit(a, b, &unit);
      d.add(a);
    } else {
      auto a = graph_bracket_polynomial(m, g), b = graph_bracket_polynomial_via_cycles(m, g);
      ok = equal_up_to_unit(a, b, &unit);
      d.add(a);
    }
    d.add(m.name() + " " + g.describe());
    d.add(unit);
    ++checked;
    if (!ok) out.fail(m.name() + " " + g.describe() + ": det and cycle route differ");
  }
  if (out.pass && checked < 50) out.fail("only " + std::to_string(checked) + " random instances available");
  if (out.pass) out.detail = "5 displayed instances and 50 random admissible instances (k <= 5) agree up to a unit";
  return out;
}

// ---- 3: golden displays ----

Outcome golden_displays(unsigned, Digest& d) {
  Outcome out;
  std::string units;
  for (const auto& [name, g] : named_graphs()) {
    auto m = builtin::by_name(name);
    BracketForm got = graph_bracket_polynomial(m, g);
    BracketForm want = golden(name);
    Scalar unit;
    if (!equal_up_to_unit(got, want, &unit) || abs(unit) != 1) {
      out.fail(name + ": graph polynomial differs from the display");
      continue;
    }
    if (name != "grid3x4") {
      Scalar cu;
      if (!equal_up_to_unit(graph_polynomial(m, g), expand(want, m.rank()), &cu) || cu != unit)
        out.fail(name + ": coordinate expansion differs from the display");
    } else {
      // coordinates do not fit; compare values at random points and extras
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RationalSource r(seed);
        Realization pts;
        pts.dim = 3;
        for (int p : m.ground()) pts.points[p] = r.vector(3);
        std::map<ExtraLabel, Vector> ex;
        for (const auto& l : extra_labels(got)) ex[l] = r.vector(3);
        if (evaluate(got, pts, ex) != unit * evaluate(want, pts, ex)) out.fail("grid3x4: values differ at seed " + std::to_string(seed));
      }
    }
    d.add(got);
    units += " " + name + ":" + to_string(unit);
  }
  if (out.pass) out.detail = "units" + units;
  return out;
}

// ---- 4: vanishing on realizations ----

struct BracketCheck {
  std::string source;
  BracketForm form;
  std::vector<std::map<ExtraLabel, Vector>> bindings;
};

// every canonical choice for the extras, or `cap` evenly spaced ones
std::vector<std::map<ExtraLabel, Vector>> canonical_bindings(const std::vector<ExtraLabel>& labels, int n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < labels.size(); ++i) total *= static_cast<std::uint64_t>(n);
  std::uint64_t count = std::min(total, cap);
  std::vector<std::map<ExtraLabel, Vector>> out;
  for (std::uint64_t t = 0; t < count; ++t) {
    std::uint64_t code = t * (total / count);
    std::map<ExtraLabel, Vector> b;
    for (std::size_t i = labels.size(); i-- > 0; code /= static_cast<std::uint64_t>(n))
      b[labels[i]] = unit(n, 1 + static_cast<int>(code % static_cast<std::uint64_t>(n)));
    out.push_back(std::move(b));
  }
  return out;
}

Outcome vanishing(unsigned threads, Digest& d) {
  Outcome out;
  std::string counts;
  for (const std::string name : {"qs", "grid3x4", "pascal", "concurrent3", "fig2c", "fig2r"}) {
    auto m = builtin::by_name(name);
    const int n = m.rank();
    std::vector<LabeledPolynomial> polys = circuit_polynomials(m);
    LiftingOptions lo;
    lo.threads = threads;
    for (auto& lp : lifting_family(m, canonical_basis(n), lo).polynomials) polys.push_back(std::move(lp));
    FamilyOptions fo;
    fo.threads = threads;
    for (auto& lp : finite_generating_family(m, fo).polynomials) polys.push_back(std::move(lp));

    std::vector<BracketCheck> forms;
    LiftingOptions big;
    big.max_minor_size = 10;
    big.max_minors = name == "grid3x4" ? 20 : 300;
    const auto q1 = ExtraVector::symbolic("q1");
    for (const auto& sub : full_rank_submatroids(m))
      for (auto& lb : lifting_bracket_minors(sub, q1, big))
        forms.push_back({lb.source, std::move(lb.form), canonical_bindings({q1.label()}, n, 1000)});
    for (const auto& [gname, g] : named_graphs()) {
      if (gname != name) continue;
      BracketForm f = graph_bracket_polynomial(m, g);
      auto labels = extra_labels(f);
      forms.push_back({"graph " + g.describe(), std::move(f), canonical_bindings(labels, n, 729)});
    }
    for (const auto& lp : polys) d.add(lp.source), d.add(lp.polynomial);
    for (const auto& f : forms) d.add(f.source), d.add(f.form);

    std::size_t evaluations = 0;
    for (std::uint64_t seed = 1; seed <= 50 && out.pass; ++seed) {
      Realization g = sample_family(name, seed);
      if (!in_realization_space(g, m)) out.fail(name + " seed " + std::to_string(seed) + ": sample is not a realization");
      for (const auto& [p, v] : g.points)
        for (const auto& x : v) d.add(x);
      VerifyOptions vo;
      vo.canonical_sweep = true;
      vo.threads = threads;
      auto rep = verify_vanishing(polys, g, {}, vo);
      evaluations += rep.records.size();
      for (const auto& rec : rep.records) {
        d.add(rec.value);
        if (!rec.pass) {
          out.fail(name + " seed " + std::to_string(seed) + ": " + rec.poly_id + " at " + rec.assignment + " = " + to_string(rec.value));
          break;
        }
      }
      auto values = parallel_map<std::vector<Scalar>>(forms.size(), threads, [&](std::size_t i) {
        std::vector<Scalar> vs;
        for (const auto& b : forms[i].bindings) vs.push_back(evaluate(forms[i].form, g, b));
        return vs;
      });
      for (std::size_t i = 0; i < forms.size(); ++i)
        for (const auto& v : values[i]) {
          ++evaluations;
          d.add(v);
          if (!is_zero(v)) out.fail(name + " seed " + std::to_string(seed) + ": " + forms[i].source + " = " + to_string(v));
        }
    }
    counts += " " + name + ":" + std::to_string(polys.size() + forms.size()) + "/" + std::to_string(evaluations);
  }
  if (out.pass) out.detail = "polynomials/evaluations over 50 realizations each:" + counts;
  return out;
}

// ---- 5: Pascal witness ----

Outcome pascal_witness(unsigned, Digest& d) {
  Outcome out;
  auto m = builtin::pascal();
  Realization g;
  g.dim = 3;
  RationalSource r(5);
  std::vector<Scalar> xs;
  for (int p : m.ground()) {
    Scalar x;
    do x = r.scalar();
    while (std::find(xs.begin(), xs.end(), x) != xs.end());
    xs.push_back(x);
    g.points[p] = {x, Scalar(1), Scalar(0)};
  }
  GraphData pg = pascal_graph();
  pg.extra = {ExtraVector::canonical(3, 3)};
  Scalar value = graph_polynomial(m, pg).evaluate(assignment_for(g));
  Scalar bracket_value = evaluate(graph_bracket_polynomial(m, pg), g);
  d.add(value);
  if (is_zero(value)) out.fail("Pascal polynomial vanishes at the witness");
  if (value != bracket_value) out.fail("coordinate and bracket values differ");
  int brackets = 0;
  for_each_subset(m.ground(), 3, [&](PointSet s) {
    ++brackets;
    if (!is_zero(bareiss_determinant(matrix_from_columns(g.vectors(s), 3)))) out.fail("bracket " + s.to_string() + " is nonzero");
  });
  if (out.pass) out.detail = "value " + to_string(value) + ", all " + std::to_string(brackets) + " brackets vanish";
  return out;
}

// ---- 6: lift round trip ----

Outcome lift_round_trip(unsigned, Digest& d) {
  Outcome out;
  for (const std::string name : {"qs", "grid3x4"}) {
    auto m = builtin::by_name(name);
    for (std::uint64_t seed = 1; seed <= 50 && out.pass; ++seed) {
      Realization g = sample_family(name, seed);
      RationalSource r(seed * 7919 + 1);
      Vector q, h;
      for (;;) {
        q = r.nonzero_vector(3);
        h = r.nonzero_vector(3);
        if (is_zero(dot(h, q))) continue;
        bool through = false;
        for (const auto& [p, v] : g.points) through = through || rank_of_vectors({v, q}, 3) < 2;
        if (!through) break;
      }
      Realization flat = project(g, Hyperplane(h), q);
      auto res = lift(flat, q, m);
      d.add(std::to_string(res.kernel_dimension));
      if (res.kernel_dimension < 3) out.fail(name + " seed " + std::to_string(seed) + ": kernel dimension " + std::to_string(res.kernel_dimension));
      else if (!res.lifted) out.fail(name + " seed " + std::to_string(seed) + ": no lift");
      else if (res.lifted->rank() != 3 || !in_circuit_variety(*res.lifted, m))
        out.fail(name + " seed " + std::to_string(seed) + ": lift is not a full-rank point of V_C");
      if (res.lifted)
        for (const auto& [p, v] : res.lifted->points)
          for (const auto& x : v) d.add(x);
    }
  }
  auto m = builtin::qs();
  for (std::uint64_t seed = 1; seed <= 50 && out.pass; ++seed) {
    Realization g = sample_collinear(m, seed);
    RationalSource r(seed * 104729 + 3);
    Vector q = spanning_center(g, r);
    ScalarMatrix mq = evaluated_liftability_matrix(g, m, q);
    bool found = false;
    for (const auto& cols : combinations(mq.cols(), mq.rows())) {
      ScalarMatrix sub(mq.rows(), mq.rows());
      for (std::size_t i = 0; i < mq.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = mq(i, cols[j]);
      Scalar v = leibniz_det(sub);
      if (!is_zero(v)) {
        found = true;
        d.add(v);
        break;
      }
    }
    if (!found) out.fail("collinear seed " + std::to_string(seed) + ": every 4x4 minor vanishes");
    auto res = lift(g, q, m);
    d.add(std::to_string(res.kernel_dimension));
    if (res.lifted) out.fail("collinear seed " + std::to_string(seed) + ": lift returned a collection");
  }
  if (out.pass) out.detail = "100 projections lift back; 50 collinear QS sets have a nonzero 4x4 minor and no lift";
  return out;
}

// ---- 7: uniform kernel dimension ----

Outcome uniform_kernel(unsigned, Digest& d) {
  Outcome out;
  int cases = 0;
  for (int n = 3; n <= 4; ++n)
    for (int dd = n + 1; dd <= n + 4; ++dd) {
      auto m = builtin::coplanar(n, dd);
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Realization g = sample_coplanar(n, dd, seed);
        RationalSource r(seed * 31 + static_cast<std::uint64_t>(n * 100 + dd));
        Vector q = spanning_center(g, r);
        auto ker = exact_kernel(evaluated_liftability_matrix(g, m, q));
        d.add(std::to_string(ker.size()));
        ++cases;
        if (ker.size() != static_cast<std::size_t>(n - 1))
          out.fail("n=" + std::to_string(n) + " d=" + std::to_string(dd) + " seed " + std::to_string(seed) + ": kernel dimension " +
                   std::to_string(ker.size()));
      }
    }
  if (out.pass) out.detail = std::to_string(cases) + " cases with kernel dimension n-1";
  return out;
}

// ---- 8: maximal minors are graph polynomials ----

bool perfect_matching(const std::vector<PointSet>& rows, const std::vector<int>& cols, std::vector<int>& pick, std::size_t i = 0) {
  if (i == rows.size()) return true;
  for (int p : cols) {
    if (!rows[i].contains(p) || std::find(pick.begin(), pick.end(), p) != pick.end()) continue;
    pick.push_back(p);
    if (perfect_matching(rows, cols, pick, i + 1)) return true;
    pick.pop_back();
  }
  return false;
}

// Square submatrices of M_q(M): columns P outside a closed J, rows |P|
// circuits inside J u P.
Outcome minors_are_graph_polynomials(unsigned, Digest& d) {
  Outcome out;
  std::string counts;
  for (const std::string name : {"qs", "fig2r"}) {
    auto m = builtin::by_name(name);
    const auto q = ExtraVector::symbolic("q1");
    const auto circuits = m.circuits_n();
    PolyMatrix mq = liftability_matrix(m, q);
    MinorExpander<Polynomial> ex(mq);
    int matched = 0, deficient = 0;
    for (int js = 0; js < m.size(); ++js)
      for_each_subset(m.ground(), js, [&](PointSet J) {
        if (!out.pass || m.rank_of(J) >= m.rank() || !m.is_closed(J)) return;
        PointSet free = m.ground() - J;
        for (int k = 1; k <= free.size(); ++k)
          for_each_subset(free, k, [&](PointSet P) {
            std::vector<std::size_t> inside;
            for (std::size_t r = 0; r < circuits.size(); ++r)
              if (circuits[r].is_subset_of(J | P)) inside.push_back(r);
            if (inside.size() < static_cast<std::size_t>(k)) return;
            const std::vector<int> cols = P.elements();
            std::vector<std::size_t> cs;
            for (int p : cols) cs.push_back(static_cast<std::size_t>(m.ground().index_of(p)));
            for (const auto& pick_rows : combinations(inside.size(), k)) {
              std::vector<std::size_t> rs;
              std::vector<PointSet> rows;
              for (auto i : pick_rows) rs.push_back(inside[i]), rows.push_back(circuits[inside[i]]);
              Polynomial minor = ex.minor(rs, cs);
              d.add(minor);
              std::vector<int> pick;
              const std::string tag = name + " J=" + J.to_string() + " P=" + P.to_string();
              if (!perfect_matching(rows, cols, pick)) {
                ++deficient;
                GraphOptions loose;
                loose.validate = false;
                if (!minor.is_zero() || !graph_polynomial(m, GraphData{J, cols, rows, {q}}, loose).is_zero())
                  out.fail(tag + ": Hall-deficient instance is nonzero");
                continue;
              }
              ++matched;
              GraphData g{J, pick, rows, {q}};
              if (minor != graph_polynomial(m, g) * Scalar(permutation_sign(cols, pick)))
                out.fail(g.describe() + ": minor differs from the graph polynomial");
            }
          });
      });
    counts += " " + name + ":" + std::to_string(matched) + "+" + std::to_string(deficient);
  }
  if (out.pass) out.detail = "minors equal to graph polynomials + Hall-deficient zeros:" + counts;
  return out;
}

// ---- 9: sufficient liftability ----

Outcome sufficient_liftability(unsigned, Digest& d) {
  Outcome out;
  auto grid = liftable_sufficient(builtin::grid3x3());
  auto qs = liftable_sufficient(builtin::qs());
  auto text = [](const LiftabilityVerdict& v) {
    return std::to_string(v.points) + (v.certified ? " >= " : " < ") + std::to_string(v.circuits + v.rank);
  };
  d.add(text(grid) + text(qs));
  if (!grid.certified || grid.points != 9 || grid.circuits + grid.rank != 9) out.fail("grid3x3: " + text(grid));
  if (qs.certified || qs.points != 6 || qs.circuits + qs.rank != 7) out.fail("qs: " + text(qs));
  if (out.pass) out.detail = "grid3x3 certified (" + text(grid) + "), qs inconclusive (" + text(qs) + ")";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"cycle identity equals det(I-A)", cycle_identity},
      {"determinant and cycle route agree", det_vs_cycles},
      {"displayed polynomials", golden_displays},
      {"generators vanish on realizations", vanishing},
      {"Pascal witness", pascal_witness},
      {"lift round trip", lift_round_trip},
      {"uniform kernel dimension n-1", uniform_kernel},
      {"maximal minors are graph polynomials", minors_are_graph_polynomials},
      {"sufficient liftability", sufficient_liftability},
  };
  auto run_all = [&](unsigned threads, std::vector<Outcome>* outcomes) {
    std::vector<std::uint64_t> digests;
    for (const auto& [label, fn] : criteria) {
      Digest d;
      Outcome o;
      auto t0 = std::chrono::steady_clock::now();
      try {
        o = fn(threads, d);
      } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
      }
      if (outcomes) {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::fprintf(stderr, "  [%s: %.1fs]\n", label.c_str(), secs);
        outcomes->push_back(o);
      }
      digests.push_back(d.value());
    }
    return digests;
  };

  bool all = true;
  std::vector<Outcome> outcomes;
  auto first = run_all(1, &outcomes);
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    all = all && outcomes[i].pass;
    std::printf("%s %zu %s: %s\n", outcomes[i].pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), outcomes[i].detail.c_str());
    std::fflush(stdout);
  }

  const unsigned many = 4;
  auto second = run_all(1, nullptr);
  auto threaded = run_all(many, nullptr);
  Outcome det;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (first[i] != second[i]) det.fail("criterion " + std::to_string(i + 1) + " differs between two runs");
    if (first[i] != threaded[i]) det.fail("criterion " + std::to_string(i + 1) + " differs between 1 and " + std::to_string(many) + " threads");
  }
  if (det.pass) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(first[0]));
    det.detail = "9 artifact digests identical over 2 runs and 1 vs " + std::to_string(many) + " threads (first " + buf + ")";
  }
  all = all && det.pass;
  std::printf("%s 10 deterministic artifacts: %s\n", det.pass ? "PASS" : "FAIL", det.detail.c_str());
  return all ? 0 : 1;
}
