#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cmath>
#include <string>
#include <string_view>

#include "seppack/errors.hpp"

namespace seppack {

using Integer = boost::multiprecision::mpz_int;
/// Arbitrary-precision rational; GMP keeps it canonical (lowest terms, positive denominator).
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator_of(const Rational &q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational &q) { return boost::multiprecision::denominator(q); }

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

inline Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw ParseError("malformed integer '" + std::string(s) + "'");
  if (s[0] == '+')
    s.remove_prefix(1);
  return Integer(std::string(s));
}

} // namespace detail

/// Parses "p/q" or "p". Non-reduced forms are accepted and normalized; q = 0 is rejected.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(detail::parse_integer(text));
  Integer num = detail::parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("sign in denominator of '" + std::string(text) + "'");
  Integer den = detail::parse_integer(den_text);
  if (den == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

/// Canonical "p/q" form; integers print without the denominator.
inline std::string to_string(const Rational &q) {
  if (denominator_of(q) == 1)
    return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline double to_double(const Rational &q) { return q.convert_to<double>(); }

/// Exact rational value of a finite double.
inline Rational from_double(double x) {
  if (!std::isfinite(x))
    throw DomainError("non-finite value has no rational form");
  return Rational(x);
}

} // namespace seppack
