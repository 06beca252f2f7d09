#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "paving/generators/graph.hpp"
#include "paving/generators/liftability.hpp"
#include "paving/geometry/realization.hpp"
#include "paving/matroid/builtin.hpp"

namespace paving::io {

using json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

namespace detail {

template <class T>
T get(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(what + ": missing field \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(what + ": field \"" + key + "\": " + e.what());
  }
}

inline PointSet ids(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array of point ids");
  PointSet s;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(what + ": point ids must be integers");
    int p = x.get<int>();
    if (p < 1 || p > PointSet::kMaxPoint) throw UnknownPoint(what + ": point id " + std::to_string(p) + " outside 1..64");
    s.insert(p);
  }
  return s;
}

inline Scalar scalar(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("rationals must be \"p/q\" strings or integers");
}

inline Vector vector(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  Vector v;
  for (const auto& x : j) v.push_back(scalar(x));
  return v;
}

inline json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline json ids_json(PointSet s) {
  json a = json::array();
  for (int p : s) a.push_back(p);
  return a;
}

}  // namespace detail

// ---- matroid ----

inline PavingMatroid matroid_from_json(const json& j) {
  const std::string what = "matroid";
  int n = detail::get<int>(j, "rank", what);
  if (!j.contains("ground_set")) throw ParseError("matroid: missing field \"ground_set\"");
  PointSet ground;
  if (j["ground_set"].is_array()) {
    ground = detail::ids(j["ground_set"], what);
  } else {
    int d = detail::get<int>(j, "ground_set", what);
    if (d < 0 || d > PointSet::kMaxPoint) throw ValidationError("ground set size outside 0..64");
    ground = PointSet::range(1, d);
  }
  std::vector<PointSet> hs;
  if (!j.contains("hyperplanes") || !j["hyperplanes"].is_array()) throw ParseError("matroid: missing array \"hyperplanes\"");
  for (const auto& h : j["hyperplanes"]) hs.push_back(detail::ids(h, what));
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  return PavingMatroid::validate(n, ground, hs, name);
}

inline json matroid_to_json(const PavingMatroid& m) {
  json j;
  if (!m.name().empty()) j["name"] = m.name();
  j["rank"] = m.rank();
  if (m.ground() == PointSet::range(1, m.size()))
    j["ground_set"] = m.size();
  else
    j["ground_set"] = detail::ids_json(m.ground());
  j["hyperplanes"] = json::array();
  for (auto h : m.hyperplanes()) j["hyperplanes"].push_back(detail::ids_json(h));
  return j;
}

/// Built-in name or a JSON file path.
inline PavingMatroid load_matroid(const std::string& spec) {
  try {
    return builtin::by_name(spec);
  } catch (const UnknownFamily&) {
  }
  return matroid_from_json(parse_json(read_file(spec), spec));
}

// ---- graph data ----

inline GraphData graph_data_from_json(const json& j) {
  const std::string what = "graph data";
  GraphData g;
  g.J = detail::ids(j.contains("J") ? j["J"] : json::array(), what);
  if (!j.contains("P") || !j["P"].is_array()) throw ParseError("graph data: missing array \"P\"");
  for (const auto& p : j["P"]) {
    if (!p.is_number_integer()) throw ParseError("graph data: P entries must be integers");
    g.P.push_back(p.get<int>());
  }
  if (!j.contains("C") || !j["C"].is_array()) throw ParseError("graph data: missing array \"C\"");
  for (const auto& c : j["C"]) g.C.push_back(detail::ids(c, what));
  if (j.contains("extra")) {
    for (const auto& e : j["extra"]) {
      if (e.contains("symbolic"))
        g.extra.push_back(ExtraVector::symbolic(e["symbolic"].get<std::string>()));
      else if (e.contains("concrete"))
        g.extra.push_back(ExtraVector::concrete(detail::vector(e["concrete"])));
      else
        throw ParseError("graph data: extra entries need \"symbolic\" or \"concrete\"");
    }
  }
  return g;
}

inline json graph_data_to_json(const GraphData& g) {
  json j;
  j["J"] = detail::ids_json(g.J);
  j["P"] = g.P;
  j["C"] = json::array();
  for (auto c : g.C) j["C"].push_back(detail::ids_json(c));
  j["extra"] = json::array();
  for (const auto& e : g.extra) {
    json x;
    if (e.is_symbolic())
      x["symbolic"] = e.label().to_string();
    else
      x["concrete"] = detail::vector_json(e.coordinates());
    j["extra"].push_back(x);
  }
  return j;
}

// ---- realization ----

inline Realization realization_from_json(const json& j) {
  Realization g;
  if (j.contains("matroid")) {
    if (j["matroid"].is_string())
      g.matroid = j["matroid"].get<std::string>();
    else if (j["matroid"].is_object())
      g.matroid = matroid_from_json(j["matroid"]).name();
  }
  if (!j.contains("points") || !j["points"].is_object()) throw ParseError("realization: missing object \"points\"");
  for (const auto& [key, value] : j["points"].items()) {
    int p = 0;
    try {
      std::size_t used = 0;
      p = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("realization: bad point id \"" + key + "\"");
    }
    Vector v = detail::vector(value);
    if (g.dim == 0) g.dim = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != g.dim) throw IndexMismatch("realization: vectors of different lengths");
    g.points[p] = std::move(v);
  }
  if (j.contains("seed") && j["seed"].is_number_integer()) g.seed = j["seed"].get<std::uint64_t>();
  return g;
}

inline json realization_to_json(const Realization& g) {
  json j;
  j["matroid"] = g.matroid;
  j["points"] = json::object();
  for (const auto& [p, v] : g.points) j["points"][std::to_string(p)] = detail::vector_json(v);
  if (g.seed) j["seed"] = *g.seed;
  return j;
}

/// Matroid named by the realization: built-in name, or the inline object.
inline PavingMatroid matroid_of_realization(const json& j) {
  if (!j.contains("matroid")) throw ParseError("realization: missing field \"matroid\"");
  if (j["matroid"].is_object()) return matroid_from_json(j["matroid"]);
  return builtin::by_name(j["matroid"].get<std::string>());
}

// ---- polynomial files ----

/// "# source: <label>" followed by the polynomial on the next line.
inline std::string write_polynomials(const std::vector<LabeledPolynomial>& ps) {
  std::string out;
  for (const auto& lp : ps) out += "# source: " + lp.source + "\n" + lp.polynomial.to_string() + "\n";
  return out;
}

inline std::string write_emission(const Emission& em) {
  std::string out;
  for (const auto& note : em.notes) out += "# note: " + note + "\n";
  if (em.truncated) out += "# truncated: true\n";
  return out + write_polynomials(em.polynomials);
}

inline std::vector<LabeledPolynomial> read_polynomials(const std::string& text) {
  std::vector<LabeledPolynomial> out;
  std::istringstream in(text);
  std::string line, source;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string tag = "# source: ";
      if (line.rfind(tag, 0) == 0) source = line.substr(tag.size());
      continue;
    }
    Polynomial p;
    try {
      p = parse_polynomial(line);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    out.push_back({source.empty() ? "poly" + std::to_string(out.size() + 1) : source, std::move(p)});
    source.clear();
  }
  return out;
}

}  // namespace paving::io
