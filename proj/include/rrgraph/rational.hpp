#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rrgraph {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact fraction. GMP keeps every result of arithmetic in lowest terms
/// with a positive denominator; values built by hand go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Accepts `p`, `p/q` and finite decimals such as `-1.25`.
/// Throws std::invalid_argument on anything else (including q = 0).
Rational parse_rational(std::string_view text);

/// Canonical `p/q`, or `p` when the denominator is 1.
std::string format_rational(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace rrgraph
