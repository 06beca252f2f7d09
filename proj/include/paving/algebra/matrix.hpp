#pragma once

#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "paving/algebra/errors.hpp"
#include "paving/algebra/polynomial.hpp"
#include "paving/algebra/scalar.hpp"

namespace paving {

/// Dense row-major matrix with optional unique axis labels.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  T& at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    return (*this)(r, c);
  }
  const T& at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    return (*this)(r, c);
  }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  void set_row_labels(std::vector<std::string> labels) {
    check_labels(labels, rows_);
    row_labels_ = std::move(labels);
  }
  void set_col_labels(std::vector<std::string> labels) {
    check_labels(labels, cols_);
    col_labels_ = std::move(labels);
  }

  Matrix submatrix(std::span<const std::size_t> rs, std::span<const std::size_t> cs) const {
    Matrix out(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = at(rs[i], cs[j]);
    return out;
  }

  template <class Fn>
  auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const T&>()))> {
    Matrix<decltype(fn(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = fn((*this)(r, c));
    if (!row_labels_.empty()) out.set_row_labels(row_labels_);
    if (!col_labels_.empty()) out.set_col_labels(col_labels_);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static void check_labels(const std::vector<std::string>& labels, std::size_t n) {
    if (labels.size() != n) throw DimensionMismatch("label count does not match axis length");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw Error("matrix labels must be unique per axis");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

using PolyMatrix = Matrix<Polynomial>;
using ScalarMatrix = Matrix<Scalar>;

inline ScalarMatrix evaluate(const PolyMatrix& m, const std::map<Variable, Scalar>& assignment) {
  return m.map([&](const Polynomial& p) { return p.evaluate(assignment); });
}

}  // namespace paving
