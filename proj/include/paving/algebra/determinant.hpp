#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "paving/algebra/linalg.hpp"
#include "paving/algebra/matrix.hpp"

namespace paving {

struct DeterminantOptions {
  std::size_t max_size = 16;  // symbolic cap; scalar matrices are unlimited
};

namespace detail {

template <class T>
bool entry_is_zero(const T& v) {
  using paving::is_zero;
  return is_zero(v);
}

template <class T>
T leibniz(const Matrix<T>& m, std::span<const std::size_t> r, std::span<const std::size_t> c) {
  switch (r.size()) {
    case 0:
      return T(1);
    case 1:
      return m(r[0], c[0]);
    case 2:
      return m(r[0], c[0]) * m(r[1], c[1]) - m(r[0], c[1]) * m(r[1], c[0]);
    default: {
      auto a = [&](int i, int j) -> const T& { return m(r[i], c[j]); };
      T out = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1));
      out -= a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0));
      out += a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
      return out;
    }
  }
}

}  // namespace detail

/// Laplace expansion along the first remaining row with a memo keyed by
/// (row set, column set). One instance serves every minor of one matrix, so
/// sub-minors shared between minors are computed once. Not thread-safe; use
/// one instance per thread.
template <class T>
class MinorExpander {
 public:
  explicit MinorExpander(const Matrix<T>& m) : m_(m) {
    if (m.rows() > 32 || m.cols() > 32) throw TooLarge("minor expansion supports at most 32 rows and columns");
  }

  // rows and cols ascending, same length
  T minor(std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    if (rows.size() != cols.size()) throw NonSquare("minor with different row and column counts");
    if (rows.size() <= 3) return detail::leibniz(m_, rows, cols);
    std::uint32_t rm = 0, cm = 0;
    for (auto r : rows) rm |= 1u << r;
    for (auto c : cols) cm |= 1u << c;
    return expand(rm, cm);
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  T expand(std::uint32_t rm, std::uint32_t cm) {
    int k = std::popcount(rm);
    if (k <= 3) {
      std::size_t rs[3], cs[3];
      int i = 0;
      for (std::uint32_t b = rm; b; b &= b - 1) rs[i++] = std::countr_zero(b);
      i = 0;
      for (std::uint32_t b = cm; b; b &= b - 1) cs[i++] = std::countr_zero(b);
      return detail::leibniz(m_, std::span<const std::size_t>(rs, k), std::span<const std::size_t>(cs, k));
    }
    std::uint64_t key = (std::uint64_t(rm) << 32) | cm;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::size_t r0 = std::countr_zero(rm);
    std::uint32_t rest = rm & (rm - 1);
    T acc{};
    bool negative = false;
    for (std::uint32_t b = cm; b; b &= b - 1, negative = !negative) {
      std::size_t c = std::countr_zero(b);
      const T& e = m_(r0, c);
      if (detail::entry_is_zero(e)) continue;
      T sub = expand(rest, cm & ~(1u << c));
      if (detail::entry_is_zero(sub)) continue;
      if (negative)
        acc -= e * sub;
      else
        acc += e * sub;
    }
    memo_.emplace(key, acc);
    return acc;
  }

  const Matrix<T>& m_;
  std::unordered_map<std::uint64_t, T> memo_;
};

template <class T>
T determinant(const Matrix<T>& m, const DeterminantOptions& opts = {}) {
  if (m.rows() != m.cols()) throw NonSquare("determinant of non-square matrix");
  if constexpr (std::is_same_v<T, Scalar>) {
    return bareiss_determinant(m);
  } else {
    if (m.rows() > opts.max_size)
      throw TooLarge("symbolic determinant of size " + std::to_string(m.rows()) + " exceeds cap " +
                     std::to_string(opts.max_size));
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    MinorExpander<T> ex(m);
    return ex.minor(idx, idx);
  }
}

}  // namespace paving
