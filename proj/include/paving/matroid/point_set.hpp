#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "paving/algebra/errors.hpp"

namespace paving {

/// Set of point ids 1..64 stored as a bitmask.
class PointSet {
 public:
  static constexpr int kMaxPoint = 64;

  PointSet() = default;
  PointSet(std::initializer_list<int> ids) {
    for (int p : ids) insert(p);
  }
  explicit PointSet(std::span<const int> ids) {
    for (int p : ids) insert(p);
  }

  static PointSet from_bits(std::uint64_t bits) {
    PointSet s;
    s.bits_ = bits;
    return s;
  }
  static PointSet range(int first, int last) {
    PointSet s;
    for (int p = first; p <= last; ++p) s.insert(p);
    return s;
  }

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(int p) const { return p >= 1 && p <= kMaxPoint && ((bits_ >> (p - 1)) & 1u); }
  void insert(int p) {
    check(p);
    bits_ |= std::uint64_t(1) << (p - 1);
  }
  void erase(int p) {
    check(p);
    bits_ &= ~(std::uint64_t(1) << (p - 1));
  }

  bool is_subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
  int min() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
  int max() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

  friend PointSet operator|(PointSet a, PointSet b) { return from_bits(a.bits_ | b.bits_); }
  friend PointSet operator&(PointSet a, PointSet b) { return from_bits(a.bits_ & b.bits_); }
  friend PointSet operator-(PointSet a, PointSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend bool operator==(PointSet, PointSet) = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    explicit iterator(std::uint64_t b = 0) : b_(b) {}
    int operator*() const { return std::countr_zero(b_) + 1; }
    iterator& operator++() {
      b_ &= b_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t b_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> elements() const { return {begin(), end()}; }

  // Position of p among the elements (0-based), -1 if absent.
  int index_of(int p) const {
    if (!contains(p)) return -1;
    return std::popcount(bits_ & ((std::uint64_t(1) << (p - 1)) - 1));
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int p : *this) {
      if (!first) out += ",";
      first = false;
      out += std::to_string(p);
    }
    return out + "}";
  }

 private:
  static void check(int p) {
    if (p < 1 || p > kMaxPoint) throw UnknownPoint("point id " + std::to_string(p) + " outside 1..64");
  }
  std::uint64_t bits_ = 0;
};

// Lexicographic comparison of sorted element lists: {1,2,3} < {1,2,4} < {1,3}.
inline bool lex_less(PointSet a, PointSet b) {
  auto i = a.begin(), j = b.begin();
  for (; i != a.end() && j != b.end(); ++i, ++j)
    if (*i != *j) return *i < *j;
  return i == a.end() && j != b.end();
}

// Visit k-subsets of s in lexicographic order.
inline void for_each_subset(PointSet s, int k, const std::function<void(PointSet)>& fn) {
  std::vector<int> e = s.elements();
  int n = static_cast<int>(e.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    PointSet sub;
    for (int i : idx) sub.insert(e[i]);
    fn(sub);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Index combinations {0..n-1} choose k, lexicographic.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace paving
