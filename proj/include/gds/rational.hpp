#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "gds/error.hpp"

namespace gds {

/// Exact rational number, always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Renders "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace detail {

inline bool parse_integer_text(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return false;
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
  }
  out = negative ? Integer(-value) : value;
  return true;
}

}  // namespace detail

/// Parses "p/q" or "p". Decimal points, exponents and zero denominators are rejected.
inline Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);

  const auto slash = trimmed.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!detail::parse_integer_text(trimmed, num))
      throw InvalidInput("not an exact rational: '" + std::string(text) + "'");
  } else {
    if (!detail::parse_integer_text(trimmed.substr(0, slash), num) ||
        !detail::parse_integer_text(trimmed.substr(slash + 1), den))
      throw InvalidInput("not an exact rational: '" + std::string(text) + "'");
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace gds
