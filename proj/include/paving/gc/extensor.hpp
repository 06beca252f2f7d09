#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "paving/algebra/polynomial.hpp"
#include "paving/algebra/scalar.hpp"

namespace paving {

namespace detail {

// Parity of pairs (a in A, b in B) with a > b: the sign of sorting A followed by B.
inline bool merge_parity(std::uint32_t a, std::uint32_t b) {
  int inv = 0;
  for (std::uint32_t x = a; x; x &= x - 1) {
    int i = std::countr_zero(x);
    inv += std::popcount(b & ((1u << i) - 1));
  }
  return inv & 1;
}

template <class C>
bool coeff_is_zero(const C& c) {
  using paving::is_zero;
  return is_zero(c);
}

}  // namespace detail

/// Homogeneous element of the exterior algebra of K^d. Keys are bitmasks of
/// basis indices (bit i = e_{i+1}); the stored coefficient carries the sign
/// for the ascending ordering of the key.
template <class Coeff>
class Extensor {
 public:
  Extensor() = default;
  Extensor(int dim, int grade) : dim_(dim), grade_(grade) {
    if (dim < 1 || dim > 31) throw DimensionMismatch("extensor dimension outside 1..31");
    if (grade < 0 || grade > dim) throw DimensionMismatch("extensor grade outside 0..d");
  }

  static Extensor scalar(int dim, const Coeff& c) {
    Extensor e(dim, 0);
    e.add(0, c);
    return e;
  }

  static Extensor vector(const std::vector<Coeff>& coords) {
    Extensor e(static_cast<int>(coords.size()), 1);
    for (std::size_t i = 0; i < coords.size(); ++i) e.add(1u << i, coords[i]);
    return e;
  }

  // e_{i1} v ... v e_{ik}, indices 1-based, in the given order.
  static Extensor basis(int dim, const std::vector<int>& indices) {
    Extensor e = scalar(dim, Coeff(1));
    for (int i : indices) {
      if (i < 1 || i > dim) throw DimensionMismatch("basis index outside 1..d");
      std::vector<Coeff> v(dim, Coeff(0));
      v[i - 1] = Coeff(1);
      e = join(e, vector(v));
    }
    return e;
  }

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  const std::map<std::uint32_t, Coeff>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Coeff coefficient(std::uint32_t key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Coeff(0) : it->second;
  }

  void add(std::uint32_t key, const Coeff& c) {
    if (std::popcount(key) != grade_ || (dim_ < 32 && (key >> dim_)))
      throw DimensionMismatch("extensor key does not match grade");
    if (detail::coeff_is_zero(c)) return;
    auto [it, fresh] = coeffs_.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) coeffs_.erase(it);
    }
  }

  friend Extensor operator+(const Extensor& a, const Extensor& b) {
    check(a, b);
    if (a.grade_ != b.grade_) throw DimensionMismatch("sum of extensors of different grade");
    Extensor r = a;
    for (const auto& [k, c] : b.coeffs_) r.add(k, c);
    return r;
  }

  friend Extensor operator*(const Coeff& s, const Extensor& a) {
    Extensor r(a.dim_, a.grade_);
    for (const auto& [k, c] : a.coeffs_) r.add(k, s * c);
    return r;
  }

  friend bool operator==(const Extensor&, const Extensor&) = default;

  /// Wedge product; zero when the grades add past d.
  friend Extensor join(const Extensor& a, const Extensor& b) {
    check(a, b);
    if (a.grade_ + b.grade_ > a.dim_) return Extensor(a.dim_, 0);
    Extensor r(a.dim_, a.grade_ + b.grade_);
    for (const auto& [ka, ca] : a.coeffs_)
      for (const auto& [kb, cb] : b.coeffs_) {
        if (ka & kb) continue;
        Coeff c = ca * cb;
        if (detail::merge_parity(ka, kb)) c = -c;
        r.add(ka | kb, c);
      }
    return r;
  }

  /// Shuffle formula: for basis blades A (grade k) and B (grade j) the only
  /// split of A giving a nonzero bracket [A1 B] is A1 = complement of B, so
  /// e_A meet e_B = sgn(A -> A1,A2) * [A1 B] * e_{A2}.
  friend Extensor meet(const Extensor& a, const Extensor& b) {
    check(a, b);
    const int d = a.dim_;
    if (a.grade_ + b.grade_ < d) return Extensor(d, 0);
    const std::uint32_t full = (d == 32) ? ~0u : ((1u << d) - 1);
    Extensor r(d, a.grade_ + b.grade_ - d);
    for (const auto& [ka, ca] : a.coeffs_)
      for (const auto& [kb, cb] : b.coeffs_) {
        std::uint32_t a1 = full & ~kb;
        if ((a1 & ka) != a1) continue;
        std::uint32_t a2 = ka & kb;
        bool neg = detail::merge_parity(a1, a2) ^ detail::merge_parity(a1, kb);
        Coeff c = ca * cb;
        if (neg) c = -c;
        r.add(a2, c);
      }
    return r;
  }

  /// Coefficient of e_1 v ... v e_d of a top-grade extensor.
  Coeff bracket() const {
    if (grade_ != dim_) throw DimensionMismatch("bracket of an extensor that is not top grade");
    return coefficient(dim_ == 32 ? ~0u : ((1u << dim_) - 1));
  }

  // Coordinates of a grade-1 extensor.
  std::vector<Coeff> coordinates() const {
    if (grade_ != 1) throw DimensionMismatch("coordinates of an extensor that is not a vector");
    std::vector<Coeff> v(dim_, Coeff(0));
    for (const auto& [k, c] : coeffs_) v[std::countr_zero(k)] = c;
    return v;
  }

 private:
  static void check(const Extensor& a, const Extensor& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("extensors live in different dimensions");
  }

  int dim_ = 1;
  int grade_ = 0;
  std::map<std::uint32_t, Coeff> coeffs_;
};

template <class Coeff>
bool is_zero(const Extensor<Coeff>& e) {
  return e.is_zero();
}

/// Iterated join of rank-1 extensors.
template <class Coeff>
Extensor<Coeff> extensor_from_vectors(const std::vector<std::vector<Coeff>>& vectors, int dim) {
  Extensor<Coeff> e = Extensor<Coeff>::scalar(dim, Coeff(1));
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != dim) throw DimensionMismatch("vector length differs from ambient dimension");
    e = join(e, Extensor<Coeff>::vector(v));
  }
  return e;
}

}  // namespace paving
