#pragma once

#include <string>
#include <variant>
#include <vector>

#include "paving/algebra/linalg.hpp"
#include "paving/algebra/polynomial.hpp"

namespace paving {

using Column = std::vector<Polynomial>;

inline Column point_column(int point, int n) {
  Column c;
  c.reserve(n);
  for (int r = 1; r <= n; ++r) c.push_back(entry_variable(r, point));
  return c;
}

/// Extra vector used in brackets: a named symbolic column or a concrete one.
class ExtraVector {
 public:
  ExtraVector() = default;
  static ExtraVector symbolic(ExtraLabel label) {
    ExtraVector v;
    v.value_ = label;
    return v;
  }
  static ExtraVector symbolic(const std::string& id) { return symbolic(ExtraLabel::parse(id)); }
  static ExtraVector concrete(Vector coords) {
    ExtraVector v;
    v.value_ = std::move(coords);
    return v;
  }
  // e_index in dimension n, index 1-based
  static ExtraVector canonical(int n, int index) {
    if (index < 1 || index > n) throw DimensionMismatch("canonical basis index outside 1..n");
    Vector e(n, Scalar(0));
    e[index - 1] = 1;
    return concrete(std::move(e));
  }

  bool is_symbolic() const { return std::holds_alternative<ExtraLabel>(value_); }
  ExtraLabel label() const { return std::get<ExtraLabel>(value_); }
  const Vector& coordinates() const { return std::get<Vector>(value_); }

  Column column(int n) const {
    Column c;
    if (is_symbolic()) {
      for (int r = 1; r <= n; ++r) c.emplace_back(Variable::extra(r, label()));
      return c;
    }
    const auto& v = coordinates();
    if (static_cast<int>(v.size()) != n) throw DimensionMismatch("extra vector has wrong length");
    for (const auto& s : v) c.emplace_back(s);
    return c;
  }

  std::string describe() const {
    if (is_symbolic()) return label().to_string();
    std::string out = "(";
    const auto& v = coordinates();
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
    return out + ")";
  }

  friend bool operator==(const ExtraVector&, const ExtraVector&) = default;

 private:
  std::variant<ExtraLabel, Vector> value_ = ExtraLabel{};
};

}  // namespace paving
