#pragma once

/**
 * @file scalar.hpp
 * @brief Exact rational scalars backed by GMP.
 *
 * Every coefficient and every evaluated value in eqpush is a Scalar. GMP keeps
 * mpq_class values canonical (lowest terms, positive denominator) after each
 * arithmetic operation; values built from strings are canonicalized here.
 */

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "eqpush/error.hpp"

namespace eqpush {

using Scalar = mpq_class;
using Integer = mpz_class;

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace detail

/// Parses "a" or "a/b" (decimal integers, b nonzero) into a canonical rational.
inline Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den))
    throw Error(ErrorKind::ParseError, "not a rational literal: '" + std::string(text) + "'");
  auto strip_plus = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
  Integer p(strip_plus(num), 10);
  Integer q(strip_plus(den), 10);
  if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

/// Canonical decimal text: "p" for integers, "p/q" otherwise.
inline std::string format_scalar(const Scalar& x) { return x.get_str(10); }

/// Exact integer power; negative exponents require x != 0.
inline Scalar pow(const Scalar& x, long e) {
  if (e < 0) {
    if (x == 0) throw Error(ErrorKind::ZeroToNegativePower, "0 raised to a negative power");
    Scalar inv = 1 / x;
    return pow(inv, -e);
  }
  Scalar r(1);
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace eqpush
