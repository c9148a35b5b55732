#pragma once

#include "abel/expansion.hpp"
#include "abel/grid.hpp"

namespace abel {

/// Upsilon^{t_j}(v) for every grid point: |v| nested cumulative trapezoid
/// integrations, innermost letter first (the last letter is the outermost
/// integral). The empty word gives the constant 1.
std::vector<double> iterated_integral(const Word& v, const ControlGrid& g);

/// Per-order values Phi_k(t_j) of the expansion plus their running partial
/// sums. bound is filled by the paths that know the equation; it is empty
/// otherwise. integrals_per_order records how many one-dimensional
/// quadratures order k cost on the product path.
struct ExpansionTable {
  int K = 0;
  std::vector<std::vector<double>> phi;        // phi[k], k = 1..K; phi[0] unused
  std::vector<double> partial;                 // sum_{k<=K} phi_k
  std::vector<double> bound;                   // remainder majorant per grid point
  std::vector<std::size_t> integrals_per_order;  // index k, 0 for k <= 1
};

/// Word-by-word evaluation Phi_k = sum_v <Z_k, v> Upsilon(v). Exponentially
/// expensive in k; kept as the independent oracle for the product path.
ExpansionTable evaluate_series(const GradedSeries& Z, const ControlGrid& g);

/// The integration-minimizing recursion: Phi_1 = int u_0 and
/// Phi_{k+1} = sum_i C(n,i) sum_{l in ordered N_i(k)} R(l) int Phi_{l_1}...Phi_{l_i} u_i,
/// where R(l) = i!/prod(mult!) counts the distinct rearrangements of l. Each
/// order k performs exactly bounded_partition_count(k-1, n) quadratures.
ExpansionTable expansion_via_products(const EquationSpec& spec, const ControlGrid& g, int K,
                                      int guard = kDefaultOrderGuard);

/// Majorant tail sum_{k>K} |T_n^k| (M t)^k / k! per grid point; infinite at
/// and beyond the certified radius (open-interval statement for n >= 2).
std::vector<double> remainder_bound(const EquationSpec& spec, const ControlGrid& g, int K);

/// min{T, 1/(M(n-1))} for n >= 2 with M > 0; T otherwise.
struct RadiusReport {
  int n = 0;
  double M = 0.0;
  double T = 0.0;
  double radius = 0.0;
  /// Strictly inside the certified interval of absolute convergence.
  bool inside(double time) const { return time < radius || (n <= 1 && time <= radius); }
};

RadiusReport convergence_radius(const EquationSpec& spec, double M, double T);

/// max_j |Upsilon(v sh w) - Upsilon(v) Upsilon(w)| over the grid; shrinks at
/// the quadrature's second order as N grows.
double homomorphism_check(const Word& v, const Word& w, const ControlGrid& g);

}  // namespace abel
