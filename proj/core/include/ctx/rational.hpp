#ifndef CTX_RATIONAL_HPP
#define CTX_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ctx {

/// Exact arbitrary-precision rational. Always stored reduced with a
/// positive denominator, so equality is literal equality.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Renders "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p", "p/q" or "-p/q". Not-lowest-terms input is reduced.
/// Throws ParseError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace ctx

#endif
