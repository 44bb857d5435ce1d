// Exact rational scalars backed by GMP.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lhp {

// Expression templates are disabled so that `auto` never captures a lazy
// expression referring to temporaries.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Arbitrary-precision rational. GMP keeps every value canonical: the
/// fraction is reduced, the denominator is positive and zero is 0/1, so
/// structural equality is value equality.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return Integer(boost::multiprecision::numerator(q)); }
inline Integer denominator_of(const Rational& q) { return Integer(boost::multiprecision::denominator(q)); }

inline int sign(const Rational& q) { return q.sign(); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

/// "num/den" for non-integers, "num" for integers.
inline std::string to_string(const Rational& q) { return q.str(); }

namespace detail {

inline bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace detail

/// Parses a decimal integer or a "num/den" rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
inline Rational parse_rational(std::string_view text) {
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!detail::is_integer_literal(num, true) || !detail::is_integer_literal(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  return make_rational(Integer(n), Integer(std::string(den)));
}

}  // namespace lhp
