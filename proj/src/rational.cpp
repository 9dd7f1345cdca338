#include "rrgraph/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rrgraph {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Integer num, den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) bad_literal(text);
    num = Integer(std::string(p));
    den = Integer(std::string(q));
    if (den == 0) bad_literal(text);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad_literal(text);
    num = Integer(std::string(whole) + std::string(frac));
    den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  } else {
    if (!all_digits(body)) bad_literal(text);
    num = Integer(std::string(body));
    den = 1;
  }
  if (negative) num = -num;
  return make_rational(num, den);
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace rrgraph
