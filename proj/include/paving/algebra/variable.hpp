#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "paving/algebra/errors.hpp"

namespace paving {

// Name of an extra vector: one lowercase letter plus a positive index ("q1").
struct ExtraLabel {
  char letter = 'q';
  std::uint32_t index = 1;

  friend auto operator<=>(const ExtraLabel&, const ExtraLabel&) = default;

  std::string to_string() const { return std::string(1, letter) + std::to_string(index); }

  static ExtraLabel parse(const std::string& s) {
    if (s.size() < 2 || s[0] < 'a' || s[0] > 'z') throw ParseError("bad extra-vector id: " + s);
    std::uint64_t v = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad extra-vector id: " + s);
      v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (v > 0xffffffffu) throw ParseError("extra-vector index too large: " + s);
    }
    if (v == 0) throw ParseError("extra-vector index must be positive: " + s);
    return {s[0], static_cast<std::uint32_t>(v)};
  }
};

/// Coordinate variable: x[r,p] for matrix entries, q1[r] for extra vectors.
/// Packed as kind | row | letter | index so that integer order is the
/// lexicographic (kind, row, column) order.
class Variable {
 public:
  enum class Kind : std::uint8_t { entry = 0, extra = 1 };

  Variable() = default;

  static Variable entry(int row, int point) {
    check_row(row);
    if (point < 1) throw Error("point id must be positive");
    return Variable((std::uint64_t(row) << 48) | std::uint64_t(point));
  }

  static Variable extra(int row, ExtraLabel label) {
    check_row(row);
    return Variable((std::uint64_t(1) << 63) | (std::uint64_t(row) << 48) |
                    (std::uint64_t(std::uint8_t(label.letter)) << 32) | label.index);
  }

  Kind kind() const { return (key_ >> 63) ? Kind::extra : Kind::entry; }
  int row() const { return int((key_ >> 48) & 0x7fff); }
  int point() const { return int(key_ & 0xffffffffu); }
  ExtraLabel label() const {
    return {char((key_ >> 32) & 0xff), std::uint32_t(key_ & 0xffffffffu)};
  }
  std::uint64_t key() const { return key_; }

  friend auto operator<=>(const Variable&, const Variable&) = default;

  std::string to_string() const {
    if (kind() == Kind::entry)
      return "x[" + std::to_string(row()) + "," + std::to_string(point()) + "]";
    return label().to_string() + "[" + std::to_string(row()) + "]";
  }

 private:
  explicit Variable(std::uint64_t key) : key_(key) {}
  static void check_row(int row) {
    if (row < 1 || row > 0x7fff) throw Error("row index out of range");
  }
  std::uint64_t key_ = 0;
};

inline std::string atom_to_string(const Variable& v) { return v.to_string(); }

}  // namespace paving
