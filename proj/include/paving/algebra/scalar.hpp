#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "paving/algebra/errors.hpp"

namespace paving {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

inline std::string to_string(const Scalar& s) { return s.get_str(); }

/// Accepts "p", "-p", "p/q". Rejects zero denominators and junk.
inline Scalar parse_scalar(std::string_view text) {
  std::string t(text);
  auto trim = [](std::string& s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    s.erase(0, i);
  };
  trim(t);
  if (t.empty()) throw ParseError("empty rational");
  auto slash = t.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) throw ParseError("bad rational: " + t);
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw ParseError("bad rational: " + t);
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator: " + t);
  Scalar out(n, d);
  out.canonicalize();
  return out;
}

inline Scalar power(const Scalar& base, unsigned e) {
  Scalar r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace paving
