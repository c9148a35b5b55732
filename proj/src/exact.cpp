#include "abel/exact.hpp"

#include <stdexcept>

namespace abel {

Integer factorial(unsigned k) {
  Integer r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // divides exactly: r is C(n-k+i, i) at this point
  }
  return r;
}

Integer multinomial(unsigned k, std::span<const int> parts) {
  unsigned total = 0;
  Integer denom = 1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    total += static_cast<unsigned>(p);
    denom *= factorial(static_cast<unsigned>(p));
  }
  if (total != k) throw std::invalid_argument("multinomial: parts do not sum to k");
  return factorial(k) / denom;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_to_string(const Rational& r) {
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
    const Integer num{std::string(s.substr(0, slash))};
    const Integer den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  }
}

}  // namespace abel
