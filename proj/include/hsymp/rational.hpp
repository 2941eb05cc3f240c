#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hsymp/errors.hpp"

namespace hsymp {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator) through arithmetic; constructors below
/// canonicalize explicitly since mpq_class(n, d) does not.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" (base 10). Anything else is an input error.
inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw input_error("empty rational literal");
  const auto slash = s.find('/');
  const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  mpz_class n, d;
  if (num.empty() || den.empty() || n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw input_error("malformed rational literal: '" + s + "'");
  if (d == 0) throw input_error("rational with zero denominator: '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hsymp
