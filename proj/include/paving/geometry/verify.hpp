#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "paving/algebra/parallel.hpp"
#include "paving/generators/liftability.hpp"
#include "paving/geometry/realization.hpp"

namespace paving {

enum class Expect { zero, nonzero };

struct VerifyOptions {
  bool canonical_sweep = false;  // bind every unbound extra vector to each e_i in turn
  Expect expect = Expect::zero;
  std::size_t max_assignments = 4096;  // per polynomial in sweep mode
  unsigned threads = 1;
};

struct VerifyRecord {
  std::string poly_id;
  std::string assignment;
  Scalar value;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyRecord> records;
  bool truncated = false;

  bool all_pass() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }

  std::string json_lines() const {
    std::string out;
    for (const auto& r : records) {
      nlohmann::ordered_json j;
      j["poly_id"] = r.poly_id;
      j["assignment"] = r.assignment;
      j["value"] = to_string(r.value);
      j["pass"] = r.pass;
      out += j.dump() + "\n";
    }
    return out;
  }
};

inline std::set<ExtraLabel> extra_labels(const Polynomial& p) {
  std::set<ExtraLabel> out;
  for (const auto& v : p.support())
    if (v.kind() == Variable::Kind::extra) out.insert(v.label());
  return out;
}

namespace detail {

inline std::string describe_assignment(const Realization& g, const std::map<ExtraLabel, Vector>& extras) {
  std::string out = g.matroid.empty() ? "gamma" : g.matroid;
  if (g.seed) out += " seed=" + std::to_string(*g.seed);
  for (const auto& [l, v] : extras) {
    out += " " + l.to_string() + "=(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
    out += ")";
  }
  return out;
}

}  // namespace detail

/// Evaluates each polynomial at gamma plus the bindings (and, in sweep mode,
/// every canonical-basis choice for the remaining extra vectors). A record
/// passes when its value matches the expectation. UnboundVariable propagates.
inline VerifyReport verify_vanishing(const std::vector<LabeledPolynomial>& polys, const Realization& g,
                                     const std::map<ExtraLabel, Vector>& bindings = {}, const VerifyOptions& opts = {}) {
  struct Part {
    std::vector<VerifyRecord> records;
    bool truncated = false;
  };
  const int n = g.dim;
  auto parts = parallel_map<Part>(polys.size(), opts.threads, [&](std::size_t i) {
    Part part;
    const auto& lp = polys[i];
    std::vector<ExtraLabel> free;
    if (opts.canonical_sweep)
      for (const auto& l : extra_labels(lp.polynomial))
        if (!bindings.count(l)) free.push_back(l);
    std::vector<int> idx(free.size(), 1);
    for (;;) {
      auto extras = bindings;
      for (std::size_t t = 0; t < free.size(); ++t) {
        Vector e(n, Scalar(0));
        e[idx[t] - 1] = 1;
        extras[free[t]] = std::move(e);
      }
      Scalar v = lp.polynomial.evaluate(assignment_for(g, extras));
      bool zero = is_zero(v);
      part.records.push_back({lp.source, detail::describe_assignment(g, extras), v,
                              opts.expect == Expect::zero ? zero : !zero});
      if (part.records.size() >= opts.max_assignments) {
        part.truncated = true;
        break;
      }
      std::size_t pos = idx.size();
      while (pos > 0 && idx[pos - 1] == n) idx[--pos] = 1;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
    return part;
  });
  VerifyReport rep;
  for (auto& p : parts) {
    rep.truncated = rep.truncated || p.truncated;
    for (auto& r : p.records) rep.records.push_back(std::move(r));
  }
  return rep;
}

}  // namespace paving
