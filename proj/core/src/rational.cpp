#include "cozc/rational.hpp"

#include <cctype>

#include "cozc/error.hpp"

namespace cozc {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < digits.size() && (digits[pos] == '-' || digits[pos] == '+')) {
    negative = digits[pos] == '-';
    ++pos;
  }
  if (pos == digits.size())
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
  Integer value = 0;
  for (; pos < digits.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(digits[pos])))
      throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (digits[pos] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  auto num = parse_integer(text.substr(0, slash), text);
  auto den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace cozc
