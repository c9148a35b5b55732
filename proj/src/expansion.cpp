#include "abel/expansion.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace abel {

namespace {

void check_guard(int K, int guard) {
  if (K < 0) throw std::invalid_argument("truncation order must be >= 0");
  if (K > guard)
    throw OrderGuardExceeded("truncation order " + std::to_string(K) + " exceeds guard " +
                             std::to_string(guard));
}

// Shuffle products Z_{l_1} sh ... sh Z_{l_i} memoized by sorted multi-index;
// the product commutes, so the sorted key is canonical. Prefix products are
// cached too, so each distinct partition costs one shuffle.
class PartProductCache {
 public:
  explicit PartProductCache(const std::vector<NCPolynomial>& parts) : parts_(parts) {}

  const NCPolynomial& product(std::vector<int> sorted_index) {
    auto it = cache_.find(sorted_index);
    if (it != cache_.end()) return it->second;
    NCPolynomial value;
    if (sorted_index.size() == 1) {
      value = parts_[static_cast<std::size_t>(sorted_index[0])];
    } else {
      const int last = sorted_index.back();
      std::vector<int> head(sorted_index.begin(), sorted_index.end() - 1);
      value = shuffle(product(std::move(head)), parts_[static_cast<std::size_t>(last)]);
    }
    return cache_.emplace(std::move(sorted_index), std::move(value)).first->second;
  }

 private:
  const std::vector<NCPolynomial>& parts_;
  std::map<std::vector<int>, NCPolynomial> cache_;
};

// All (l_1..l_i) with parts >= 1 and sum k, in lexicographic order.
void for_each_composition(int k, int i, const std::function<void(std::span<const int>)>& fn) {
  std::vector<int> parts(static_cast<std::size_t>(i));
  auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == i - 1) {
      if (remaining >= 1) {
        parts[static_cast<std::size_t>(pos)] = remaining;
        fn(parts);
      }
      return;
    }
    for (int l = 1; l + (i - pos - 1) <= remaining; ++l) {
      parts[static_cast<std::size_t>(pos)] = l;
      self(self, pos + 1, remaining - l);
    }
  };
  recurse(recurse, 0, k);
}

// The Eq-style recursion with a caller-chosen set of active letters; the
// general equation uses {1..n}, the two-term equation just {n}.
GradedSeries expand_with_letters(int n, std::span<const int> letters, int K, int guard) {
  check_guard(K, guard);
  if (n < 0) throw std::invalid_argument("polynomial degree n must be >= 0");
  GradedSeries Z(K);
  if (K >= 1) Z.set_part(1, NCPolynomial::letter(0));

  std::vector<NCPolynomial> parts(static_cast<std::size_t>(K) + 1);
  if (K >= 1) parts[1] = NCPolynomial::letter(0);
  PartProductCache cache(parts);

  for (int k = 1; k + 1 <= K; ++k) {
    NCPolynomial next;
    for (int i : letters) {
      if (i < 1 || i > n) continue;
      const Rational weight{binomial(static_cast<unsigned>(n), static_cast<unsigned>(i))};
      NCPolynomial inner;
      for_each_composition(k, i, [&](std::span<const int> l) {
        std::vector<int> key(l.begin(), l.end());
        std::sort(key.begin(), key.end());
        inner += cache.product(std::move(key));
      });
      next += concat(weight * inner, NCPolynomial::letter(i));
    }
    Z.set_part(k + 1, next);
    parts[static_cast<std::size_t>(k) + 1] = std::move(next);
  }
  return Z;
}

}  // namespace

GradedSeries expand_general(const EquationSpec& spec, int K, int guard) {
  std::vector<int> letters(static_cast<std::size_t>(std::max(spec.n, 0)));
  for (int i = 1; i <= spec.n; ++i) letters[static_cast<std::size_t>(i) - 1] = i;
  return expand_with_letters(spec.n, letters, K, guard);
}

bool verify_algebraic_equation(const GradedSeries& Z, const EquationSpec& spec) {
  const int K = Z.truncation_order();
  GradedSeries rhs(K);
  if (K >= 1) rhs.set_part(1, NCPolynomial::letter(0));
  GradedSeries power = Z;  // Z^sh 1
  for (int i = 1; i <= spec.n; ++i) {
    if (i > 1) power = shuffle_truncated(power, Z, K);
    const Rational weight{binomial(static_cast<unsigned>(spec.n), static_cast<unsigned>(i))};
    const NCPolynomial letter_i = NCPolynomial::letter(i);
    for (int k = 0; k + 1 <= K; ++k)
      rhs.add_to_part(k + 1, concat(weight * power.part(k), letter_i));
  }
  return rhs == Z;
}

GradedSeries expand_linear_closed_form(int K) {
  if (K < 1) throw std::invalid_argument("expand_linear_closed_form needs K >= 1");
  GradedSeries Z(K);
  Word w = Word::single(0);
  Z.set_part(1, NCPolynomial::monomial(w));
  for (int k = 2; k <= K; ++k) {
    w = w.appended(1);
    Z.set_part(k, NCPolynomial::monomial(w));
  }
  return Z;
}

bool n1_identity_check(int K) {
  if (K < 1) throw std::invalid_argument("n1_identity_check needs K >= 1");
  const GradedSeries exp_pos = shuffle_exp_truncated(NCPolynomial::letter(1), K);
  const GradedSeries exp_neg = shuffle_exp_truncated(-NCPolynomial::letter(1), K - 1);
  const NCPolynomial tail = concat(exp_neg.sum(), NCPolynomial::letter(0));
  const GradedSeries rhs = shuffle_truncated(exp_pos, graded_from_polynomial(tail, K), K);
  return rhs == expand_linear_closed_form(K);
}

GradedSeries expand_riccati(int K, int guard) {
  check_guard(K, guard);
  GradedSeries Z(K);
  if (K >= 1) Z.set_part(1, NCPolynomial::letter(0));
  const NCPolynomial a1 = NCPolynomial::letter(1);
  const NCPolynomial a2 = NCPolynomial::letter(2);
  for (int k = 1; k + 1 <= K; ++k) {
    NCPolynomial next = concat(Rational(2) * Z.part(k), a1);
    NCPolynomial quad;
    for (int l = 1; l <= k - 1; ++l) quad += shuffle(Z.part(l), Z.part(k - l));
    next += concat(quad, a2);
    Z.set_part(k + 1, next);
  }
  return Z;
}

GradedSeries omega_series(const GradedSeries& Z) {
  const int K = Z.truncation_order();
  GradedSeries omega(K + 1);
  omega.set_part(1, NCPolynomial::letter(1));
  const NCPolynomial a2 = NCPolynomial::letter(2);
  for (int k = 1; k <= K; ++k) omega.add_to_part(k + 1, concat(Z.part(k), a2));
  return omega;
}

GradedSeries two_term_expand(int n, int K, int guard) {
  if (n < 1) throw std::invalid_argument("two_term_expand needs n >= 1");
  const int letters[] = {n};
  return expand_with_letters(n, letters, K, guard);
}

}  // namespace abel
