#pragma once

#include <string>

#include "abel/series.hpp"

namespace abel {

/// JSON forms used by the CLI. Coefficients are emitted as decimal strings:
/// they routinely exceed 64-bit range and JSON numbers would lose them.
///   polynomial: [ {"word":[0,1,1], "num":"2", "den":"1"}, ... ]
///   series:     {"n":2, "K":4, "parts":[[...], [...], ...]}
/// Both round-trip exactly through the readers below (integer-typed num/den
/// are accepted on input).
std::string polynomial_to_json(const NCPolynomial& p);
NCPolynomial polynomial_from_json(const std::string& text);

std::string series_to_json(const GradedSeries& s, int n);

struct SeriesWithAlphabet {
  GradedSeries series;
  int n = 0;
};
SeriesWithAlphabet series_from_json(const std::string& text);

}  // namespace abel
