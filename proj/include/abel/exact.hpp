#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <string_view>

namespace abel {

// Word counts grow factorially with the degree, so every exact quantity in
// the project uses arbitrary-precision integers and rationals.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(unsigned k);

/// C(n, k); zero when k > n.
Integer binomial(unsigned n, unsigned k);

/// k! / (l_1! ... l_m!). Requires sum(parts) == k.
Integer multinomial(unsigned k, std::span<const int> parts);

double to_double(const Rational& r);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);
Rational rational_from_string(std::string_view s);

}  // namespace abel
