#include "abel/series.hpp"

#include <stdexcept>

namespace abel {

GradedSeries::GradedSeries(int truncation_order) {
  if (truncation_order < 0) throw std::invalid_argument("truncation order must be >= 0");
  parts_.resize(static_cast<std::size_t>(truncation_order) + 1);
}

const NCPolynomial& GradedSeries::part(int k) const {
  static const NCPolynomial kZero;
  if (k < 0 || k > truncation_order()) return kZero;
  return parts_[static_cast<std::size_t>(k)];
}

void GradedSeries::set_part(int k, NCPolynomial p) {
  if (k < 0 || k > truncation_order()) throw std::out_of_range("part index outside truncation");
  if (!p.is_homogeneous(k)) throw std::invalid_argument("part is not homogeneous of its degree");
  parts_[static_cast<std::size_t>(k)] = std::move(p);
}

void GradedSeries::add_to_part(int k, const NCPolynomial& p) {
  if (k < 0 || k > truncation_order()) throw std::out_of_range("part index outside truncation");
  if (!p.is_homogeneous(k)) throw std::invalid_argument("part is not homogeneous of its degree");
  parts_[static_cast<std::size_t>(k)] += p;
}

NCPolynomial GradedSeries::sum() const {
  NCPolynomial s;
  for (const auto& p : parts_) s += p;
  return s;
}

GradedSeries graded_from_polynomial(const NCPolynomial& p, int K) {
  if (p.max_degree() > K) throw std::invalid_argument("polynomial degree exceeds truncation");
  GradedSeries s(K);
  for (const auto& [w, c] : p.terms()) s.add_to_part(static_cast<int>(w.size()), NCPolynomial::monomial(w, c));
  return s;
}

GradedSeries shuffle_truncated(const GradedSeries& a, const GradedSeries& b, int K) {
  GradedSeries out(K);
  for (int j = 0; j <= std::min(K, a.truncation_order()); ++j) {
    if (a.part(j).is_zero()) continue;
    for (int k = 0; k + j <= K && k <= b.truncation_order(); ++k) {
      if (b.part(k).is_zero()) continue;
      out.add_to_part(j + k, shuffle(a.part(j), b.part(k)));
    }
  }
  return out;
}

GradedSeries shuffle_exp_truncated(const NCPolynomial& p, int K) {
  if (p.coefficient(Word{}) != 0)
    throw std::invalid_argument("shuffle exponential needs a vanishing constant term");
  GradedSeries out(K);
  out.set_part(0, NCPolynomial::one());
  // p^sh m has minimal degree m, so m > K contributes nothing.
  NCPolynomial power = NCPolynomial::one();
  Rational inv_factorial = 1;
  for (int m = 1; m <= K; ++m) {
    power = shuffle(power, p).truncated(K);
    inv_factorial /= m;
    for (const auto& [w, c] : power.terms())
      out.add_to_part(static_cast<int>(w.size()), NCPolynomial::monomial(w, c * inv_factorial));
  }
  return out;
}

}  // namespace abel
