#pragma once

#include <stdexcept>

#include "abel/series.hpp"

namespace abel {

/// Whether supplied coefficients are already the u_i of the binomial-weighted
/// equation x' = sum C(n,i) u_i x^i, or raw c_i with u_i = c_i / C(n,i).
enum class Convention { normalized, raw };

/// The equation x' = sum_{i=0..n} C(n,i) u_i(t) x^i, x(0) = 0.
struct EquationSpec {
  int n = 0;
  Convention convention = Convention::normalized;
};

/// Default cap on truncation orders; term counts grow roughly like
/// (n-1)^k k!, so runs beyond this need an explicit opt-in.
inline constexpr int kDefaultOrderGuard = 16;

struct OrderGuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The unique graded solution of Z = a_0 + sum_i C(n,i) Z^sh i . a_i,
/// truncated at degree K: parts 0 and 1 are 0 and a_0, and
/// Z_{k+1} = sum_i C(n,i) sum_{l in N_i(k)} Z_{l_1} sh ... sh Z_{l_i} . a_i.
/// All coefficients are nonnegative integers.
GradedSeries expand_general(const EquationSpec& spec, int K, int guard = kDefaultOrderGuard);

/// True iff Z equals a_0 + sum_i C(n,i) Z^sh i . a_i on every homogeneous
/// part of degree <= K (shuffle powers truncated).
bool verify_algebraic_equation(const GradedSeries& Z, const EquationSpec& spec);

/// n = 1 closed form: part k is a_0 a_1^{k-1}.
GradedSeries expand_linear_closed_form(int K);

/// Checks the rewriting identity sum a_0 a_1^k = exp_sh(a_1) sh (exp_sh(-a_1) . a_0)
/// symbolically through degree K.
bool n1_identity_check(int K);

/// n = 2 solution via the specialized recursion
/// Z_{k+1} = 2 Z_k . a_1 + sum_{l=1}^{k-1} Z_l sh Z_{k-l} . a_2.
GradedSeries expand_riccati(int K, int guard = kDefaultOrderGuard);

/// Omega = a_1 + Z . a_2 for the n = 2 solution Z truncated at K; the result
/// is truncated at K+1 with part 1 = a_1 and part k+1 = Z_k . a_2.
GradedSeries omega_series(const GradedSeries& Z);

/// Solution series of x' = u_0 + u_n x^n: the general recursion over the
/// two-letter sub-alphabet {a_0, a_n}. Only degrees kn+1 are nonzero.
GradedSeries two_term_expand(int n, int K, int guard = kDefaultOrderGuard);

}  // namespace abel
