#pragma once

#include <vector>

#include "abel/polynomial.hpp"

namespace abel {

/// Truncated series split into homogeneous parts: parts()[k] holds the
/// degree-k words only, k = 0..K.
class GradedSeries {
 public:
  GradedSeries() : parts_(1) {}
  explicit GradedSeries(int truncation_order);

  int truncation_order() const { return static_cast<int>(parts_.size()) - 1; }
  const std::vector<NCPolynomial>& parts() const { return parts_; }
  /// parts()[k], or the zero polynomial outside [0, K].
  const NCPolynomial& part(int k) const;

  /// Throws unless p is homogeneous of degree k and 0 <= k <= K.
  void set_part(int k, NCPolynomial p);
  void add_to_part(int k, const NCPolynomial& p);

  NCPolynomial sum() const;

  bool operator==(const GradedSeries&) const = default;

 private:
  std::vector<NCPolynomial> parts_;
};

/// Splits p into homogeneous parts; throws if p has degree > K.
GradedSeries graded_from_polynomial(const NCPolynomial& p, int K);

/// Product part k is sum_j a_j sh b_{k-j}; exact on every degree <= K.
GradedSeries shuffle_truncated(const GradedSeries& a, const GradedSeries& b, int K);

/// exp_sh(p) = sum_m p^sh m / m! truncated at degree K. Rejects polynomials
/// with a nonzero constant term (the series would not grade).
GradedSeries shuffle_exp_truncated(const NCPolynomial& p, int K);

}  // namespace abel
