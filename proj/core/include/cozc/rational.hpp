#ifndef COZC_RATIONAL_HPP
#define COZC_RATIONAL_HPP

#include <set>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace cozc {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using RationalSet = std::set<Rational>;

/// Accepts "n", "n/d", with optional sign on n; d must be positive after
/// normalisation. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Always "num/den" (e.g. "5/1", "-3/2").
std::string format_rational(const Rational& value);

}  // namespace cozc

#endif  // COZC_RATIONAL_HPP
