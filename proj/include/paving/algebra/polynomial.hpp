#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <type_traits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

#include "paving/algebra/scalar.hpp"
#include "paving/algebra/variable.hpp"

namespace paving {

/// Product of atoms with positive exponents, kept sorted by atom.
template <class Atom>
class Monomial {
 public:
  using Factor = std::pair<Atom, std::uint32_t>;
  // inline storage: generator monomials rarely have more than a dozen factors
  using Factors = boost::container::small_vector<Factor, 12>;

  Monomial() = default;
  explicit Monomial(Atom a, std::uint32_t e = 1) {
    if (e > 0) factors_.emplace_back(std::move(a), e);
  }

  static Monomial from_factors(std::vector<Factor> fs) {
    std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (auto& f : fs) {
      if (f.second == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().first == f.first)
        m.factors_.back().second += f.second;
      else
        m.factors_.push_back(std::move(f));
    }
    return m;
  }

  const Factors& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  std::uint32_t exponent(const Atom& a) const {
    for (const auto& f : factors_)
      if (f.first == a) return f.second;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
      if (i->first < j->first) {
        out.factors_.push_back(*i++);
      } else if (j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Lex order with the smallest atom as the most significant variable.
  friend std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
    std::size_t i = 0;
    for (; i < a.factors_.size() && i < b.factors_.size(); ++i) {
      const auto& fa = a.factors_[i];
      const auto& fb = b.factors_[i];
      if (fa.first < fb.first) return std::strong_ordering::greater;
      if (fb.first < fa.first) return std::strong_ordering::less;
      if (fa.second != fb.second)
        return fa.second > fb.second ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (i < a.factors_.size()) return std::strong_ordering::greater;
    if (i < b.factors_.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

 private:
  Factors factors_;
};

/// Sparse polynomial with exact rational coefficients over an ordered atom
/// type. Terms are kept sorted by decreasing lex order with nonzero
/// coefficients, so equal polynomials have identical representations.
template <class Atom>
class SparsePolynomial {
 public:
  using MonomialType = Monomial<Atom>;
  struct Term {
    MonomialType monomial;
    Scalar coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  SparsePolynomial() = default;
  SparsePolynomial(const Scalar& c) {  // NOLINT: implicit constants are convenient
    if (!paving::is_zero(c)) terms_.push_back({MonomialType{}, c});
  }
  SparsePolynomial(int c) : SparsePolynomial(Scalar(c)) {}  // NOLINT
  explicit SparsePolynomial(Atom a, std::uint32_t e = 1) { terms_.push_back({MonomialType(std::move(a), e), 1}); }

  static SparsePolynomial from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return lex_compare(a.monomial, b.monomial) > 0; });
    SparsePolynomial p;
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
        p.terms_.back().coefficient += t.coefficient;
      else
        p.terms_.push_back(std::move(t));
    }
    p.prune();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_constant()); }

  Scalar constant_value() const {
    if (!terms_.empty() && terms_.back().monomial.is_constant()) return terms_.back().coefficient;
    return 0;
  }

  const Scalar& leading_coefficient() const {
    if (terms_.empty()) throw Error("leading coefficient of zero polynomial");
    return terms_.front().coefficient;
  }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  std::vector<Atom> support() const {
    std::vector<Atom> s;
    for (const auto& t : terms_)
      for (const auto& f : t.monomial.factors()) s.push_back(f.first);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  SparsePolynomial operator-() const {
    SparsePolynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) { return merge(a, b, false); }
  friend SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) { return merge(a, b, true); }
  SparsePolynomial& operator+=(const SparsePolynomial& b) { return *this = merge(std::move(*this), b, false); }
  SparsePolynomial& operator-=(const SparsePolynomial& b) { return *this = merge(std::move(*this), b, true); }
  /// Sum of many polynomials with a single sort.
  static SparsePolynomial sum(std::vector<SparsePolynomial> parts) {
    SparsePolynomial r;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    r.terms_.resize(total);
    std::size_t k = 0;
    for (auto& p : parts)
      for (auto& t : p.terms_) swap_terms(r.terms_[k++], t);
    r.combine();
    return r;
  }

  SparsePolynomial& operator+=(SparsePolynomial&& b) { return *this = merge(std::move(*this), std::move(b), false); }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return multiply(a, b);
  }
  SparsePolynomial& operator*=(const SparsePolynomial& b) { return *this = *this * b; }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const Scalar& c) {
    if (paving::is_zero(c)) return {};
    SparsePolynomial r = a;
    for (auto& t : r.terms_) t.coefficient *= c;
    return r;
  }
  friend SparsePolynomial operator*(const Scalar& c, const SparsePolynomial& a) { return a * c; }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  /// Full evaluation. `value` returns nullopt for atoms it cannot bind;
  /// all such atoms are reported together.
  Scalar evaluate(const std::function<std::optional<Scalar>(const Atom&)>& value) const {
    std::vector<Atom> atoms = support();
    std::vector<Scalar> vals;
    vals.reserve(atoms.size());
    std::vector<std::string> missing;
    for (const auto& a : atoms) {
      auto v = value(a);
      if (v)
        vals.push_back(std::move(*v));
      else
        missing.push_back(atom_to_string(a));
    }
    if (!missing.empty()) throw UnboundVariable(std::move(missing));
    bool integral = std::all_of(vals.begin(), vals.end(), [](const Scalar& v) { return v.get_den() == 1; }) &&
                    std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coefficient.get_den() == 1; });
    if (integral) {
      // integer points (the usual case for sampled realizations) avoid gcds
      std::vector<mpz_class> iv;
      iv.reserve(vals.size());
      for (const auto& v : vals) iv.push_back(v.get_num());
      return Scalar(sum_of_terms<mpz_class>(atoms, iv, [](mpz_class& dst, const Scalar& c) { dst = c.get_num(); }));
    }
    return sum_of_terms<Scalar>(atoms, vals, [](Scalar& dst, const Scalar& c) { dst = c; });
  }

  Scalar evaluate(const std::map<Atom, Scalar>& assignment) const {
    return evaluate([&](const Atom& a) -> std::optional<Scalar> {
      auto it = assignment.find(a);
      if (it == assignment.end()) return std::nullopt;
      return it->second;
    });
  }

  // Partial evaluation: bound atoms are replaced, the rest stay symbolic.
  SparsePolynomial substitute(const std::map<Atom, Scalar>& assignment) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Scalar c = t.coefficient;
      std::vector<typename MonomialType::Factor> rest;
      for (const auto& f : t.monomial.factors()) {
        auto it = assignment.find(f.first);
        if (it == assignment.end())
          rest.push_back(f);
        else
          c *= power(it->second, f.second);
      }
      if (!paving::is_zero(c)) out.push_back({MonomialType::from_factors(std::move(rest)), c});
    }
    return from_terms(std::move(out));
  }

  // Substitute polynomials for atoms (atoms absent from the map are kept).
  SparsePolynomial compose(const std::map<Atom, SparsePolynomial>& images) const {
    SparsePolynomial total;
    for (const auto& t : terms_) {
      SparsePolynomial term(t.coefficient);
      std::vector<typename MonomialType::Factor> rest;
      for (const auto& f : t.monomial.factors()) {
        auto it = images.find(f.first);
        if (it == images.end()) {
          rest.push_back(f);
          continue;
        }
        for (std::uint32_t e = 0; e < f.second; ++e) term *= it->second;
      }
      SparsePolynomial kept;
      kept.terms_.push_back({MonomialType::from_factors(std::move(rest)), 1});
      total += term * kept;
    }
    return total;
  }

  // Rename atoms; the map must be injective on the support.
  template <class Fn>
  SparsePolynomial map_atoms(Fn&& fn) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      std::vector<typename MonomialType::Factor> fs;
      for (const auto& f : t.monomial.factors()) fs.emplace_back(fn(f.first), f.second);
      out.push_back({MonomialType::from_factors(std::move(fs)), t.coefficient});
    }
    return from_terms(std::move(out));
  }

  // `sep` joins factors; bracket polynomials print with "" (juxtaposition).
  std::string to_string(const std::string& sep = " * ") const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      bool neg = sgn(t.coefficient) < 0;
      Scalar mag = abs(t.coefficient);
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      first = false;
      const auto& fs = t.monomial.factors();
      bool unit = mag == 1;
      if (fs.empty()) {
        out += mag.get_str();
        continue;
      }
      if (!unit) out += mag.get_str() + (sep.empty() ? "" : sep);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += sep;
        out += atom_to_string(fs[i].first);
        if (fs[i].second > 1) out += "^" + std::to_string(fs[i].second);
      }
    }
    return out;
  }

 private:
  void prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return paving::is_zero(t.coefficient); }),
                 terms_.end());
  }

  // Terms of rvalue operands are moved rather than copied.
  template <class A, class B>
  static SparsePolynomial merge(A&& a, B&& b, bool subtract) {
    constexpr bool move_a = !std::is_lvalue_reference_v<A>;
    constexpr bool move_b = !std::is_lvalue_reference_v<B>;
    auto take = [](auto& it, auto movable) -> Term {
      if constexpr (decltype(movable)::value)
        return std::move(*it++);
      else
        return *it++;
    };
    SparsePolynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    auto push_b = [&] {
      r.terms_.push_back(take(j, std::bool_constant<move_b>{}));
      if (subtract) mpq_neg(r.terms_.back().coefficient.get_mpq_t(), r.terms_.back().coefficient.get_mpq_t());
    };
    while (i != a.terms_.end() && j != b.terms_.end()) {
      auto c = lex_compare(i->monomial, j->monomial);
      if (c > 0) {
        r.terms_.push_back(take(i, std::bool_constant<move_a>{}));
      } else if (c < 0) {
        push_b();
      } else {
        Term t = take(i, std::bool_constant<move_a>{});
        if (subtract)
          t.coefficient -= j->coefficient;
        else
          t.coefficient += j->coefficient;
        ++j;
        if (!paving::is_zero(t.coefficient)) r.terms_.push_back(std::move(t));
      }
    }
    while (i != a.terms_.end()) r.terms_.push_back(take(i, std::bool_constant<move_a>{}));
    while (j != b.terms_.end()) push_b();
    return r;
  }

  // Lex order is a monomial order, so term * poly stays sorted.
  // Sum of coefficient * monomial value. Lex-sorted neighbours share leading
  // factors, so partial products of the common prefix are reused.
  template <class Num, class Coef>
  Num sum_of_terms(const std::vector<Atom>& atoms, const std::vector<Num>& vals, Coef&& coef) const {
    std::size_t width = 0;
    for (const auto& t : terms_) width = std::max(width, t.monomial.factors().size());
    std::vector<Num> partial(width + 1, Num(0));  // storage reused across terms
    partial[0] = 1;
    const typename MonomialType::Factors* prev = nullptr;
    Num total = 0, term;
    for (const auto& t : terms_) {
      const auto& fs = t.monomial.factors();
      std::size_t l = 0;
      if (prev)
        while (l < fs.size() && l < prev->size() && fs[l] == (*prev)[l]) ++l;
      for (std::size_t i = l; i < fs.size(); ++i) {
        const Num& v = vals[std::lower_bound(atoms.begin(), atoms.end(), fs[i].first) - atoms.begin()];
        partial[i + 1] = partial[i] * v;
        for (std::uint32_t e = 1; e < fs[i].second; ++e) partial[i + 1] *= v;
      }
      prev = &fs;
      coef(term, t.coefficient);
      term *= partial[fs.size()];
      total += term;
    }
    return total;
  }

  // mpq_class move construction allocates (move assignment only swaps), so
  // terms are exchanged member-wise and products are built in place.
  static void swap_terms(Term& x, Term& y) {
    std::swap(x.monomial, y.monomial);
    x.coefficient.swap(y.coefficient);
  }

  // All products, sorted through an index permutation, then combined in place.
  static SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r;
    auto& ts = r.terms_;
    ts.resize(a.size() * b.size());
    std::size_t k = 0;
    for (const auto& t : a.terms_)
      for (const auto& u : b.terms_) {
        ts[k].monomial = t.monomial * u.monomial;
        if (t.coefficient.get_den() == 1 && u.coefficient.get_den() == 1)
          mpz_mul(ts[k].coefficient.get_num_mpz_t(), t.coefficient.get_num_mpz_t(), u.coefficient.get_num_mpz_t());
        else
          mpq_mul(ts[k].coefficient.get_mpq_t(), t.coefficient.get_mpq_t(), u.coefficient.get_mpq_t());
        ++k;
      }
    r.combine();
    return r;
  }

  // Sorts terms_ through an index permutation and adds up equal monomials.
  void combine() {
    auto& ts = terms_;
    std::vector<std::uint32_t> order(ts.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t x, std::uint32_t y) { return lex_compare(ts[x].monomial, ts[y].monomial) > 0; });
    // position i must receive the term currently at order[i]
    std::vector<bool> done(ts.size(), false);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (done[i]) continue;
      std::size_t cur = i;
      while (order[cur] != i) {
        swap_terms(ts[cur], ts[order[cur]]);
        done[cur] = true;
        cur = order[cur];
      }
      done[cur] = true;
    }
    std::size_t out = 0;
    for (std::size_t i = 0; i < ts.size();) {
      std::size_t j = i + 1;
      while (j < ts.size() && ts[j].monomial == ts[i].monomial) ts[i].coefficient += ts[j++].coefficient;
      if (!paving::is_zero(ts[i].coefficient)) {
        if (out != i) swap_terms(ts[out], ts[i]);
        ++out;
      }
      i = j;
    }
    ts.resize(out);
  }

  std::vector<Term> terms_;
};

template <class Atom>
bool is_zero(const SparsePolynomial<Atom>& p) {
  return p.is_zero();
}

/// a == c * b for some nonzero rational c (written to *unit when given).
template <class Atom>
bool equal_up_to_unit(const SparsePolynomial<Atom>& a, const SparsePolynomial<Atom>& b, Scalar* unit = nullptr) {
  if (a.is_zero() || b.is_zero()) {
    if (unit) *unit = 1;
    return a.is_zero() && b.is_zero();
  }
  if (a.size() != b.size()) return false;
  Scalar c = a.leading_coefficient() / b.leading_coefficient();
  if (unit) *unit = c;
  return a == b * c;
}

using Polynomial = SparsePolynomial<Variable>;

inline Polynomial entry_variable(int row, int point) { return Polynomial(Variable::entry(row, point)); }

namespace detail {

inline void hash_mpz(std::size_t& h, const mpz_class& z) {
  boost::hash_combine(h, mpz_size(z.get_mpz_t()) ? mpz_getlimbn(z.get_mpz_t(), 0) : 0);
  boost::hash_combine(h, mpz_sgn(z.get_mpz_t()));
}

}  // namespace detail

/// Structural hash; equal polynomials hash equally.
inline std::size_t hash_value(const Polynomial& p) {
  std::size_t h = p.size();
  for (const auto& t : p.terms()) {
    detail::hash_mpz(h, t.coefficient.get_num());
    detail::hash_mpz(h, t.coefficient.get_den());
    for (const auto& [v, e] : t.monomial.factors()) {
      boost::hash_combine(h, v.key());
      boost::hash_combine(h, e);
    }
  }
  return h;
}

// Sign normalization used for deduplication: leading coefficient positive.
template <class Atom>
SparsePolynomial<Atom> sign_normalized(const SparsePolynomial<Atom>& p) {
  if (!p.is_zero() && sgn(p.leading_coefficient()) < 0) return -p;
  return p;
}

/// Parses the text form written by to_string (whitespace tolerant).
inline Polynomial parse_polynomial(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("polynomial parse error at column " + std::to_string(pos + 1) + ": " + why);
  };
  auto read_uint = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (start == pos) throw fail("expected digits");
    return text.substr(start, pos - start);
  };
  auto read_int = [&]() -> int {
    std::string d = read_uint();
    if (d.size() > 9) throw fail("index too large");
    return std::stoi(d);
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };

  std::vector<Polynomial::Term> terms;
  skip();
  if (pos < text.size() && text.compare(pos, std::string::npos, "0") == 0) return {};
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first) throw fail("empty polynomial");
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Scalar coeff = sign;
    std::vector<Monomial<Variable>::Factor> factors;
    while (true) {
      skip();
      if (pos >= text.size()) throw fail("expected factor");
      char c = text[pos];
      if (c >= '0' && c <= '9') {
        std::string num = read_uint();
        std::string den = "1";
        skip();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          skip();
          den = read_uint();
        }
        coeff *= parse_scalar(num + "/" + den);
      } else if (c >= 'a' && c <= 'z') {
        ++pos;
        Variable v;
        if (c == 'x' && pos < text.size() && text[pos] == '[') {
          expect('[');
          skip();
          int r = read_int();
          expect(',');
          skip();
          int p = read_int();
          expect(']');
          v = Variable::entry(r, p);
        } else {
          std::string idx = read_uint();
          ExtraLabel label = ExtraLabel::parse(std::string(1, c) + idx);
          expect('[');
          skip();
          int r = read_int();
          expect(']');
          v = Variable::extra(r, label);
        }
        std::uint32_t e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          e = static_cast<std::uint32_t>(read_int());
        }
        factors.emplace_back(v, e);
      } else {
        throw fail(std::string("unexpected character '") + c + "'");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back({Monomial<Variable>::from_factors(std::move(factors)), coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace paving
