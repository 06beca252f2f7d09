#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paving/algebra/determinant.hpp"
#include "paving/algebra/polynomial.hpp"
#include "paving/matroid/point_set.hpp"

namespace paving {

/// Formal bracket <a b c> of named points, labels sorted ascending.
struct Bracket {
  std::vector<int> labels;
  friend auto operator<=>(const Bracket&, const Bracket&) = default;
};

inline std::string atom_to_string(const Bracket& b) {
  bool compact = std::all_of(b.labels.begin(), b.labels.end(), [](int l) { return l >= 0 && l <= 9; });
  std::string out = "⟨";
  for (std::size_t i = 0; i < b.labels.size(); ++i) {
    if (i && !compact) out += " ";
    out += std::to_string(b.labels[i]);
  }
  return out + "⟩";
}

using BracketPolynomial = SparsePolynomial<Bracket>;

namespace detail {

// Sort labels in place and return the permutation parity, or nullopt when a
// label repeats (the bracket vanishes).
inline std::optional<bool> sort_with_parity(std::vector<int>& w) {
  bool odd = false;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
      if (w[j - 1] == w[j]) return std::nullopt;
      std::swap(w[j - 1], w[j]);
      odd = !odd;
    }
  return odd;
}

}  // namespace detail

/// Signed formal bracket of an ordered word of labels.
inline BracketPolynomial bracket_of(std::vector<int> word) {
  auto odd = detail::sort_with_parity(word);
  if (!odd) return {};
  BracketPolynomial b(Bracket{std::move(word)});
  return *odd ? -b : b;
}

/// Linear combination of formal extensors (words of point labels) with
/// bracket-polynomial coefficients. Join and meet act on words by the
/// shuffle formula directly, without straightening.
class FormalExtensor {
 public:
  FormalExtensor() = default;
  explicit FormalExtensor(int dim) : dim_(dim) {}

  static FormalExtensor word(int dim, std::vector<int> labels) {
    if (static_cast<int>(labels.size()) > dim) throw DimensionMismatch("extensor word longer than the dimension");
    FormalExtensor e(dim);
    e.add(std::move(labels), BracketPolynomial(Scalar(1)));
    return e;
  }

  int dim() const { return dim_; }
  const std::map<std::vector<int>, BracketPolynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int grade() const { return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size()); }

  void add(std::vector<int> labels, const BracketPolynomial& c) {
    auto odd = detail::sort_with_parity(labels);
    if (!odd || c.is_zero()) return;
    auto& slot = terms_[labels];
    slot += *odd ? -c : c;
    if (slot.is_zero()) terms_.erase(labels);
  }

  friend FormalExtensor join(const FormalExtensor& a, const FormalExtensor& b) {
    check(a, b);
    FormalExtensor r(a.dim_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        if (wa.size() + wb.size() > static_cast<std::size_t>(a.dim_)) continue;
        std::vector<int> w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add(std::move(w), ca * cb);
      }
    return r;
  }

  friend FormalExtensor meet(const FormalExtensor& a, const FormalExtensor& b) {
    check(a, b);
    FormalExtensor r(a.dim_);
    const std::size_t d = a.dim_;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        const std::size_t k = wa.size(), j = wb.size();
        if (k + j < d) continue;
        const std::size_t take = d - j;
        for (const auto& pick : combinations(k, take)) {
          std::vector<int> first, rest;
          std::vector<bool> chosen(k, false);
          for (auto i : pick) chosen[i] = true;
          // sign of the shuffle (picked positions first, rest after)
          int inv = 0;
          for (std::size_t i = 0; i < k; ++i) {
            if (chosen[i]) {
              first.push_back(wa[i]);
            } else {
              rest.push_back(wa[i]);
              for (std::size_t t = i + 1; t < k; ++t) inv += chosen[t];
            }
          }
          std::vector<int> br = first;
          br.insert(br.end(), wb.begin(), wb.end());
          BracketPolynomial c = bracket_of(br);
          if (c.is_zero()) continue;
          c = c * ca * cb;
          if (inv & 1) c = -c;
          r.add(rest, c);
        }
      }
    return r;
  }

  /// Top-grade coefficient as a bracket polynomial; grade-0 coefficient
  /// passes through.
  BracketPolynomial brackets() const {
    BracketPolynomial out;
    for (const auto& [w, c] : terms_) {
      if (w.empty()) {
        out += c;
      } else if (static_cast<int>(w.size()) == dim_) {
        out += c * bracket_of(w);
      } else {
        throw DimensionMismatch("bracket of an extensor that is not top grade");
      }
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    if (grade() == dim_ || grade() == 0) return brackets().to_string("");
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string cs = c.to_string("");
      bool neg = c.size() == 1 && sgn(c.leading_coefficient()) < 0;
      if (neg) cs = (-c).to_string("");
      if (c.size() > 1) cs = "(" + cs + ")";
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string word;
      for (int l : w) word += (word.empty() || l <= 9 ? "" : " ") + std::to_string(l);
      out += cs + "·" + word;
    }
    return out;
  }

 private:
  static void check(const FormalExtensor& a, const FormalExtensor& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("extensors live in different dimensions");
  }

  int dim_ = 3;
  std::map<std::vector<int>, BracketPolynomial> terms_;
};

/// Expands each formal bracket <a b ...> into the determinant of the
/// coordinate columns x[.,a], x[.,b], ... in dimension n.
inline Polynomial expand_brackets(const BracketPolynomial& bp, int n) {
  std::map<Bracket, Polynomial> images;
  for (const auto& b : bp.support()) {
    if (static_cast<int>(b.labels.size()) != n) throw DimensionMismatch("bracket size differs from dimension");
    PolyMatrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = entry_variable(r + 1, b.labels[c]);
    images.emplace(b, determinant(m));
  }
  Polynomial out;
  for (const auto& t : bp.terms()) {
    Polynomial term(t.coefficient);
    for (const auto& f : t.monomial.factors())
      for (std::uint32_t e = 0; e < f.second; ++e) term *= images.at(f.first);
    out += term;
  }
  return out;
}

}  // namespace paving
