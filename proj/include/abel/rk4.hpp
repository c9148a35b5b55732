#pragma once

#include "abel/expansion.hpp"
#include "abel/grid.hpp"

namespace abel {

struct Rk4Result {
  std::vector<double> x;      // x(t_j); NaN past a blow-up
  bool blew_up = false;
  double last_safe_time = 0;  // last grid time with |x| under the ceiling
};

/// Classical 4th-order Runge-Kutta for x' = sum_i C(n,i) u_i(t) x^i on the
/// grid itself, controls interpolated linearly between samples. A validation
/// reference only; |x| crossing the ceiling is reported, not thrown.
Rk4Result rk4_solve(const EquationSpec& spec, const ControlGrid& g, double x0,
                    double ceiling = 1e9);

}  // namespace abel
