#pragma once

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "paving/cli/io.hpp"
#include "paving/gc/formal.hpp"
#include "paving/generators/family.hpp"
#include "paving/geometry/samplers.hpp"
#include "paving/geometry/verify.hpp"

namespace paving::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;       // usage, parse and binding errors
inline constexpr int kValidation = 2;  // structural violations
inline constexpr int kVerifyFail = 3;  // some verification record failed

struct CommandConfig {
  std::string matroid;
  std::string which = "all";
  std::string q = "symbolic";
  std::string graph;
  std::string polys;
  std::string realization;
  std::string family;
  std::string expect = "zero";
  std::string expression;
  std::string out;
  std::vector<std::string> binds;
  std::uint64_t seed = 0;
  std::size_t budget_minor = 4;
  std::size_t max_minors = 5000;
  std::size_t max_k = 6;
  std::size_t max_cycles = 20000;
  int dim = 3;
  unsigned threads = 1;
};

namespace detail {

// "a/b,c/d,..." -> vector
inline Vector parse_vector(const std::string& text) {
  Vector v;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      v.push_back(parse_scalar(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return v;
}

inline bool is_keyword(const std::string& q) { return q == "symbolic" || q == "canonical"; }

inline void emit(const CommandConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty() || cfg.out == "-") {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + cfg.out);
  f << text;
}

// Tiny parser for "(34 meet 12) join 56": words are digit runs (one label
// per digit) or dot-separated labels such as 10.11.12; operators are
// left-associative with equal precedence.
class GcParser {
 public:
  GcParser(std::string text, int dim) : s_(std::move(text)), dim_(dim) {}

  FormalExtensor parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) { throw ParseError("gc expression: " + why); }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool keyword(const std::string& k) {
    skip();
    if (s_.compare(pos_, k.size(), k) == 0) {
      pos_ += k.size();
      return true;
    }
    return false;
  }
  FormalExtensor expr() {
    auto lhs = atom();
    for (;;) {
      if (keyword("meet"))
        lhs = meet(lhs, atom());
      else if (keyword("join"))
        lhs = join(lhs, atom());
      else
        return lhs;
    }
  }
  FormalExtensor atom() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      auto e = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    std::string w = s_.substr(start, pos_ - start);
    if (w.empty()) fail("expected a word of labels");
    std::vector<int> labels;
    if (w.find('.') != std::string::npos) {
      std::string cur;
      for (char ch : w + ".") {
        if (ch == '.') {
          if (cur.empty()) fail("empty label in " + w);
          labels.push_back(std::stoi(cur));
          cur.clear();
        } else {
          cur += ch;
        }
      }
    } else {
      for (char ch : w) labels.push_back(ch - '0');
    }
    return FormalExtensor::word(dim_, labels);
  }

  std::string s_;
  std::size_t pos_ = 0;
  int dim_;
};

inline int cmd_validate(const CommandConfig& cfg, std::ostream& out) {
  auto m = io::load_matroid(cfg.matroid);
  out << "valid: " << (m.name().empty() ? cfg.matroid : m.name()) << " rank " << m.rank() << ", " << m.size()
      << " points, " << m.hyperplanes().size() << " hyperplanes, " << m.circuits_n().size() << " circuits, max degree "
      << m.max_degree() << "\n";
  return kOk;
}

inline int cmd_generate(const CommandConfig& cfg, std::ostream& out) {
  auto m = io::load_matroid(cfg.matroid);
  const int n = m.rank();
  const auto& w = cfg.which;
  if (w != "circuits" && w != "lifting" && w != "graph" && w != "all") throw ParseError("--which must be circuits|lifting|graph|all");
  Emission em;
  auto append = [&](Emission part) {
    em.truncated = em.truncated || part.truncated;
    for (auto& s : part.notes) em.notes.push_back(std::move(s));
    for (auto& p : part.polynomials) em.polynomials.push_back(std::move(p));
  };
  if (w == "circuits" || w == "all") append({circuit_polynomials(m), false, {}});
  if (w == "lifting" || w == "all") {
    std::vector<ExtraVector> qs;
    if (cfg.q == "symbolic")
      qs = {ExtraVector::symbolic("q1")};
    else if (cfg.q == "canonical")
      qs = canonical_basis(n);
    else
      qs = {ExtraVector::concrete(parse_vector(cfg.q))};
    for (const auto& q : qs)
      if (!q.is_symbolic() && static_cast<int>(q.coordinates().size()) != n) throw DimensionMismatch("--q has the wrong length");
    LiftingOptions lo;
    lo.max_minor_size = cfg.budget_minor;
    lo.max_minors = cfg.max_minors;
    lo.threads = cfg.threads;
    append(lifting_family(m, qs, lo));
  }
  if (w == "graph" || w == "all") {
    if (!cfg.graph.empty()) {
      auto g = io::graph_data_from_json(io::parse_json(io::read_file(cfg.graph), cfg.graph));
      if (g.extra.empty() && !is_keyword(cfg.q)) g.extra = {ExtraVector::concrete(parse_vector(cfg.q))};
      GraphOptions go;
      go.cycles.max_cycles = cfg.max_cycles;
      append({{{"graph " + g.describe(), graph_polynomial(m, g, go)}}, false, {}});
    } else {
      FamilyOptions fo;
      fo.max_k = cfg.max_k;
      fo.threads = cfg.threads;
      fo.extra = cfg.q == "symbolic" ? ExtraMode::symbolic : ExtraMode::canonical;
      auto fam = finite_generating_family(m, fo);
      Emission part{{}, fam.truncated, fam.notes};
      for (auto& lp : fam.polynomials)
        if (lp.source.rfind("graph", 0) == 0) part.polynomials.push_back(std::move(lp));
      append(std::move(part));
    }
  }
  emit(cfg, io::write_emission(em), out);
  return kOk;
}

inline int cmd_sample(const CommandConfig& cfg, std::ostream& out) {
  auto g = sample_family(cfg.family, cfg.seed);
  emit(cfg, io::realization_to_json(g).dump(2) + "\n", out);
  return kOk;
}

inline int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  auto polys = io::read_polynomials(io::read_file(cfg.polys));
  auto j = io::parse_json(io::read_file(cfg.realization), cfg.realization);
  auto g = io::realization_from_json(j);
  std::map<ExtraLabel, Vector> bindings;
  for (const auto& b : cfg.binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos) throw ParseError("--bind expects label=a,b,c");
    bindings[ExtraLabel::parse(b.substr(0, eq))] = parse_vector(b.substr(eq + 1));
  }
  VerifyOptions vo;
  vo.threads = cfg.threads;
  if (cfg.expect == "nonzero")
    vo.expect = Expect::nonzero;
  else if (cfg.expect != "zero")
    throw ParseError("--expect must be zero|nonzero");
  if (cfg.q == "canonical") {
    vo.canonical_sweep = true;
  } else if (cfg.q != "symbolic") {
    Vector v = parse_vector(cfg.q);
    for (const auto& lp : polys)
      for (const auto& l : extra_labels(lp.polynomial))
        if (!bindings.count(l)) bindings[l] = v;
  }
  for (const auto& [l, v] : bindings)
    if (static_cast<int>(v.size()) != g.dim) throw DimensionMismatch("binding for " + l.to_string() + " has the wrong length");
  auto rep = verify_vanishing(polys, g, bindings, vo);
  emit(cfg, rep.json_lines(), out);
  return rep.all_pass() ? kOk : kVerifyFail;
}

inline int cmd_gc(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.dim < 1) throw DimensionMismatch("--dim must be positive");
  auto e = GcParser(cfg.expression, cfg.dim).parse();
  emit(cfg, e.to_string() + "\n", out);
  return kOk;
}

inline int cmd_liftcheck(const CommandConfig& cfg, std::ostream& out) {
  auto m = io::load_matroid(cfg.matroid);
  auto v = liftable_sufficient(m);
  const int bound = v.circuits + v.rank;
  if (v.certified)
    out << "liftable: certified (|M| >= k+n: " << v.points << " >= " << bound << ")\n";
  else
    out << "liftable: inconclusive (" << v.points << " < " << bound << ")\n";
  return kOk;
}

}  // namespace detail

/// Parses args (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"paving matroid ideal generators and exact verification", "pavtool"};
  app.require_subcommand(1);
  CommandConfig cfg;
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "check a matroid description");
  validate->add_option("--matroid,matroid", cfg.matroid, "built-in name or JSON path")->required();

  auto* generate = app.add_subcommand("generate", "emit circuit, lifting and graph polynomials");
  generate->add_option("--matroid", cfg.matroid, "built-in name or JSON path")->required();
  generate->add_option("--which", cfg.which, "circuits|lifting|graph|all");
  generate->add_option("--q", cfg.q, "symbolic|canonical|a/b,c/d,...");
  generate->add_option("--graph", cfg.graph, "GraphData JSON for a single graph polynomial");
  generate->add_option("--budget-minor", cfg.budget_minor, "largest minor size")->check(CLI::PositiveNumber);
  generate->add_option("--max-minors", cfg.max_minors, "minors per submatroid")->check(CLI::PositiveNumber);
  generate->add_option("--max-k", cfg.max_k, "largest |P|")->check(CLI::PositiveNumber);
  generate->add_option("--max-cycles", cfg.max_cycles, "cycle budget")->check(CLI::PositiveNumber);
  generate->add_option("--out", cfg.out, "output path (default stdout)");

  auto* sample = app.add_subcommand("sample", "sample an exact realization");
  sample->add_option("--family", cfg.family, "sampler family")->required();
  sample->add_option("--seed", cfg.seed, "seed");
  sample->add_option("--out", cfg.out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "evaluate polynomials at a realization");
  verify->add_option("--polys", cfg.polys, "polynomial file")->required();
  verify->add_option("--realization", cfg.realization, "realization JSON")->required();
  verify->add_option("--q", cfg.q, "symbolic|canonical|a/b,c/d,...");
  verify->add_option("--bind", cfg.binds, "label=a,b,c (repeatable)");
  verify->add_option("--expect", cfg.expect, "zero|nonzero");
  verify->add_option("--out", cfg.out, "report path (default stdout)");

  auto* gc = app.add_subcommand("gc", "evaluate a meet/join expression of words");
  gc->add_option("expression", cfg.expression, "e.g. \"(34 meet 12) join 56\"")->required();
  gc->add_option("--dim", cfg.dim, "ambient dimension");
  gc->add_option("--out", cfg.out, "output path (default stdout)");

  auto* liftcheck = app.add_subcommand("liftcheck", "sufficient liftability test |M| >= k + n");
  liftcheck->add_option("--matroid,matroid", cfg.matroid, "built-in name or JSON path")->required();

  std::vector<std::string> argv_store{"pavtool"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return detail::cmd_validate(cfg, out);
    if (*generate) return detail::cmd_generate(cfg, out);
    if (*sample) return detail::cmd_sample(cfg, out);
    if (*verify) return detail::cmd_verify(cfg, out);
    if (*gc) return detail::cmd_gc(cfg, out);
    if (*liftcheck) return detail::cmd_liftcheck(cfg, out);
  } catch (const IntersectionTooLarge& e) {
    err << "invalid: " << e.what() << " (hyperplanes #" << e.pair().first + 1 << " and #" << e.pair().second + 1 << ")\n";
    return kValidation;
  } catch (const ValidationError& e) {
    err << "invalid: " << e.what() << "\n";
    return kValidation;
  } catch (const UnboundVariable& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace paving::cli
