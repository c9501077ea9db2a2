#ifndef QBETTI_RATIONAL_HPP
#define QBETTI_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qbetti
{

// Expression templates off: values are safe to capture with auto.

/// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exact rational, always normalized: denominator > 0, lowest terms.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Parses "p/q" or "p" (optional leading sign on p). Anything containing a
/// decimal point or exponent is rejected with std::invalid_argument, as is a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", including integers ("45/1").
std::string to_fraction_string(Rational const& value);

std::string to_decimal_string(BigInt const& value);

BigInt floor_of(Rational const& value);
BigInt ceil_of(Rational const& value);

double to_double(Rational const& value);

} // namespace qbetti

#endif
