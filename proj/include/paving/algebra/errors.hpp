#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace paving {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for inputs that are well formed but violate a structural rule.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IntersectionTooLarge : public ValidationError {
 public:
  IntersectionTooLarge(std::size_t first, std::size_t second, const std::string& what)
      : ValidationError(what), pair_(first, second) {}
  std::pair<std::size_t, std::size_t> pair() const { return pair_; }

 private:
  std::pair<std::size_t, std::size_t> pair_;
};

class HyperplaneTooSmall : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GroundSetTooSmall : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownPoint : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class HypothesisViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotFullRank : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TooFewHyperplanes : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class BadIndexSet : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IndexMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonSquare : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

class ResamplingExhausted : public Error {
 public:
  using Error::Error;
};

class CenterOnHyperplane : public Error {
 public:
  using Error::Error;
};

class PointThroughCenter : public Error {
 public:
  PointThroughCenter(int point, const std::string& what) : Error(what), point_(point) {}
  int point() const { return point_; }

 private:
  int point_;
};

class RankDefect : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::vector<std::string> missing)
      : Error(message(missing)), missing_(std::move(missing)) {}
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  static std::string message(const std::vector<std::string>& names) {
    std::string out = "unbound variables:";
    for (const auto& n : names) out += " " + n;
    return out;
  }
  std::vector<std::string> missing_;
};

}  // namespace paving
