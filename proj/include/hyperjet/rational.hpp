#pragma once

// Exact scalars and their textual form.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperjet {

/// Arbitrary-precision rational, always kept in reduced form with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  if (den < 0) return Rational(-Integer(num), -Integer(den));
  return Rational(Integer(num), Integer(den));
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) {
    return numerator(value).str();
  }
  return numerator(value).str() + "/" + denominator(value).str();
}

inline double to_double(const Rational& value) {
  return value.convert_to<double>();
}

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
  }
  Integer result = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
    }
    result = result * 10 + (c - '0');
  }
  return negative ? Integer(-result) : result;
}

}  // namespace detail

/// Parses "p/q", "p", "-p/q". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_integer(text, text));
  }
  const Integer num = detail::parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  }
  const Integer den = detail::parse_integer(den_text, text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

}  // namespace hyperjet
