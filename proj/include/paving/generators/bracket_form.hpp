#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paving/generators/extra_vector.hpp"
#include "paving/geometry/realization.hpp"

namespace paving {

/// Column of a bracket: a point, a named extra vector, or a unit vector e_i.
class ColumnRef {
 public:
  static ColumnRef point(int p) {
    if (p < 1) throw Error("point id must be positive");
    return ColumnRef(std::uint64_t(p));
  }
  static ColumnRef extra(ExtraLabel l) {
    return ColumnRef((std::uint64_t(1) << 63) | (std::uint64_t(std::uint8_t(l.letter)) << 32) | l.index);
  }
  static ColumnRef unit(int i) {
    if (i < 1) throw Error("unit vector index must be positive");
    return ColumnRef((std::uint64_t(1) << 62) | std::uint64_t(i));
  }
  // Symbolic extras become named columns, canonical vectors become e_i;
  // other concrete vectors have no bracket-level name.
  static ColumnRef of(const ExtraVector& q) {
    if (q.is_symbolic()) return extra(q.label());
    const auto& v = q.coordinates();
    int hit = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_zero(v[i])) continue;
      if (v[i] != 1 || hit) throw HypothesisViolation("bracket form needs symbolic or canonical extra vectors");
      hit = static_cast<int>(i + 1);
    }
    if (!hit) throw HypothesisViolation("extra vector is zero");
    return unit(hit);
  }

  bool is_point() const { return !(key_ >> 62); }
  bool is_extra() const { return key_ >> 63; }
  bool is_unit() const { return (key_ >> 62) == 1; }
  int point() const { return int(key_ & 0xffffffffu); }
  ExtraLabel label() const { return {char((key_ >> 32) & 0xff), std::uint32_t(key_ & 0xffffffffu)}; }
  int unit_index() const { return int(key_ & 0xffffffffu); }

  Column column(int n) const {
    if (is_point()) return point_column(point(), n);
    if (is_extra()) return ExtraVector::symbolic(label()).column(n);
    return ExtraVector::canonical(n, unit_index()).column(n);
  }

  std::string to_string() const {
    if (is_point()) return std::to_string(point());
    if (is_extra()) return label().to_string();
    return "e" + std::to_string(unit_index());
  }

  friend auto operator<=>(const ColumnRef&, const ColumnRef&) = default;

 private:
  explicit ColumnRef(std::uint64_t k) : key_(k) {}
  std::uint64_t key_ = 0;
};

/// [c1, ..., cn] with columns in ascending order (points first).
struct SymBracket {
  std::vector<ColumnRef> cols;
  friend auto operator<=>(const SymBracket&, const SymBracket&) = default;
};

inline std::string atom_to_string(const SymBracket& b) {
  std::string out = "[";
  for (std::size_t i = 0; i < b.cols.size(); ++i) out += (i ? "," : "") + b.cols[i].to_string();
  return out + "]";
}

/// Polynomial in bracket atoms. Expanding each bracket as a coordinate
/// determinant is a ring map, so identities here hold for coordinates too.
using BracketForm = SparsePolynomial<SymBracket>;

/// Signed bracket of an ordered column list; 0 when a column repeats.
inline BracketForm sym_bracket(std::vector<ColumnRef> cols) {
  bool odd = false;
  for (std::size_t i = 1; i < cols.size(); ++i)
    for (std::size_t j = i; j > 0 && !(cols[j - 1] < cols[j]); --j) {
      if (cols[j - 1] == cols[j]) return {};
      std::swap(cols[j - 1], cols[j]);
      odd = !odd;
    }
  BracketForm b(SymBracket{std::move(cols)});
  return odd ? -b : b;
}

inline BracketForm point_sym_bracket(const std::vector<int>& points, const ExtraVector& q) {
  std::vector<ColumnRef> cols;
  for (int p : points) cols.push_back(ColumnRef::point(p));
  cols.push_back(ColumnRef::of(q));
  return sym_bracket(std::move(cols));
}

struct ExpandOptions {
  std::size_t max_terms = 2000000;  // TooLarge beyond this many coordinate terms
};

/// Coordinate polynomial: each bracket becomes its n x n determinant.
inline Polynomial expand(const BracketForm& f, int n, const ExpandOptions& opts = {}) {
  std::map<SymBracket, Polynomial> cache;
  auto det_of = [&](const SymBracket& b) -> const Polynomial& {
    auto it = cache.find(b);
    if (it != cache.end()) return it->second;
    if (static_cast<int>(b.cols.size()) != n) throw DimensionMismatch("bracket size differs from dimension");
    PolyMatrix m(n, n);
    for (int c = 0; c < n; ++c) {
      auto col = b.cols[c].column(n);
      for (int r = 0; r < n; ++r) m(r, c) = col[r];
    }
    return cache.emplace(b, determinant(m)).first->second;
  };
  std::vector<Polynomial> parts;
  std::size_t bound = 0;
  for (const auto& t : f.terms()) {
    Polynomial prod(t.coefficient);
    for (const auto& [b, e] : t.monomial.factors())
      for (unsigned k = 0; k < e; ++k) {
        prod *= det_of(b);
        if (prod.size() > opts.max_terms) throw TooLarge("bracket expansion exceeds the term budget");
      }
    bound += prod.size();
    parts.push_back(std::move(prod));
    // flush early so the pending terms stay within a few budgets
    if (bound > 4 * opts.max_terms) {
      Polynomial partial = Polynomial::sum(std::move(parts));
      if (partial.size() > opts.max_terms) throw TooLarge("bracket expansion exceeds the term budget");
      parts.clear();
      parts.push_back(std::move(partial));
      bound = parts.back().size();
    }
  }
  Polynomial total = Polynomial::sum(std::move(parts));
  if (total.size() > opts.max_terms) throw TooLarge("bracket expansion exceeds the term budget");
  return total;
}

/// Exact value at gamma with the given extra vectors; unit columns are e_i.
inline Scalar evaluate(const BracketForm& f, const Realization& g, const std::map<ExtraLabel, Vector>& extras = {}) {
  std::map<SymBracket, Scalar> cache;
  std::vector<std::string> missing;
  auto vec = [&](const ColumnRef& c) -> std::optional<Vector> {
    if (c.is_point()) {
      auto it = g.points.find(c.point());
      if (it == g.points.end()) return std::nullopt;
      return it->second;
    }
    if (c.is_unit()) {
      Vector e(g.dim, Scalar(0));
      if (c.unit_index() > g.dim) throw DimensionMismatch("unit vector index exceeds dimension");
      e[c.unit_index() - 1] = 1;
      return e;
    }
    auto it = extras.find(c.label());
    if (it == extras.end()) return std::nullopt;
    return it->second;
  };
  for (const auto& b : f.support()) {
    std::vector<Vector> cols;
    for (const auto& c : b.cols) {
      auto v = vec(c);
      if (!v) {
        missing.push_back(c.to_string());
        continue;
      }
      cols.push_back(std::move(*v));
    }
    if (cols.size() == b.cols.size()) cache.emplace(b, bareiss_determinant(matrix_from_columns(cols, g.dim)));
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    throw UnboundVariable(missing);
  }
  return f.evaluate([&](const SymBracket& b) -> std::optional<Scalar> { return cache.at(b); });
}

inline std::vector<ExtraLabel> extra_labels(const BracketForm& f) {
  std::vector<ExtraLabel> out;
  for (const auto& b : f.support())
    for (const auto& c : b.cols)
      if (c.is_extra()) out.push_back(c.label());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Reads the printed form, e.g. "[2,6,q1][4,5,q2] - 2 * [4,6,q1][3,5,q2]".
/// Columns are point ids, extra labels (q1, r2, ...) or unit vectors e1..en;
/// brackets are re-sorted with their sign.
inline BracketForm parse_bracket_form(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    return ParseError("bracket form at offset " + std::to_string(pos) + ": " + why);
  };
  auto column = [&]() -> ColumnRef {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string tok = text.substr(start, pos - start);
    if (tok.empty()) throw fail("expected a column");
    if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
      for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw fail("bad point id " + tok);
      return ColumnRef::point(std::stoi(tok));
    }
    ExtraLabel l = ExtraLabel::parse(tok);
    if (l.letter == 'e') return ColumnRef::unit(static_cast<int>(l.index));
    return ColumnRef::extra(l);
  };
  auto bracket = [&]() {
    ++pos;  // '['
    std::vector<ColumnRef> cols{column()};
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        cols.push_back(column());
      } else if (pos < text.size() && text[pos] == ']') {
        ++pos;
        return sym_bracket(cols);
      } else {
        throw fail("expected ',' or ']'");
      }
    }
  };
  BracketForm total;
  bool any = false;
  for (;;) {
    skip();
    if (pos >= text.size()) break;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
      neg = text[pos] == '-';
      ++pos;
      skip();
    } else if (any) {
      throw fail("expected '+' or '-'");
    }
    BracketForm term(1);
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    bool factors = false;
    if (pos > start) {
      term = BracketForm(parse_scalar(text.substr(start, pos - start)));
      factors = true;
      skip();
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == '[') {
        term *= bracket();
        factors = true;
        skip();
        if (pos < text.size() && text[pos] == '*') ++pos;
      } else {
        break;
      }
    }
    if (!factors) throw fail("empty term");
    total += neg ? -term : term;
    any = true;
  }
  if (!any) throw fail("empty input");
  return total;
}

}  // namespace paving
