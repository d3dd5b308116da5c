#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "gentle/error.hpp"

namespace gentle {

/// Exact rational number. mpq_class keeps results of arithmetic canonical;
/// use make_rational to build one from a numerator/denominator pair.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { return DomainError("malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') throw bad();
  if (num.front() == '+') num.erase(0, 1);
  return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace gentle
