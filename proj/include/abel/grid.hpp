#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "abel/word.hpp"

namespace abel {

/// Uniform time grid with sampled control values. Immutable once built and
/// safe to share across threads.
struct ControlGrid {
  double T = 1.0;                       // horizon, time units
  std::size_t N = 0;                    // grid points, >= 2, both endpoints
  std::vector<double> t;                // t_j = j T/(N-1)
  std::vector<std::vector<double>> u;   // u[i][j] = u_i(t_j), i = 0..n
  double M = 0.0;                       // certified sup bound on all |u_i|

  int alphabet_degree() const { return static_cast<int>(u.size()) - 1; }
  double step() const { return T / static_cast<double>(N - 1); }
  bool letter_valid(Letter b) const { return static_cast<std::size_t>(b) < u.size(); }

  /// Builds the grid, checks sample lengths, and certifies M as the observed
  /// sample max unless an override is given (the override must dominate the
  /// samples).
  static ControlGrid uniform(double T, std::size_t N, std::vector<std::vector<double>> samples,
                             std::optional<double> M_override = std::nullopt);
};

/// F with F_0 = 0 and F_j = F_{j-1} + h (f_{j-1}+f_j)/2: the composite
/// trapezoid antiderivative on the grid.
std::vector<double> cumulative_trapezoid(const std::vector<double>& f, double h);

}  // namespace abel
