#include "abel/rk4.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "abel/exact.hpp"

namespace abel {

Rk4Result rk4_solve(const EquationSpec& spec, const ControlGrid& g, double x0, double ceiling) {
  const int n = spec.n;
  if (g.alphabet_degree() < n) throw std::invalid_argument("grid does not carry n+1 controls");

  std::vector<double> weights(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    weights[static_cast<std::size_t>(i)] =
        to_double(Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i))));

  // u_i between samples by linear interpolation; theta in [0, 1] within step j
  const auto rhs = [&](std::size_t j, double theta, double x) {
    double value = 0.0;
    double xp = 1.0;
    for (int i = 0; i <= n; ++i) {
      const auto& ui = g.u[static_cast<std::size_t>(i)];
      const double u = theta == 0.0 ? ui[j] : (1.0 - theta) * ui[j] + theta * ui[j + 1];
      value += weights[static_cast<std::size_t>(i)] * u * xp;
      xp *= x;
    }
    return value;
  };

  Rk4Result result;
  result.x.assign(g.N, std::numeric_limits<double>::quiet_NaN());
  result.x[0] = x0;
  result.last_safe_time = 0.0;
  const double h = g.step();
  double x = x0;
  for (std::size_t j = 0; j + 1 < g.N; ++j) {
    const double k1 = rhs(j, 0.0, x);
    const double k2 = rhs(j, 0.5, x + 0.5 * h * k1);
    const double k3 = rhs(j, 0.5, x + 0.5 * h * k2);
    const double k4 = rhs(j, 1.0, x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * (k2 + k3) + k4);
    if (!std::isfinite(x) || std::abs(x) > ceiling) {
      result.blew_up = true;
      result.last_safe_time = g.t[j];
      return result;
    }
    result.x[j + 1] = x;
    result.last_safe_time = g.t[j + 1];
  }
  return result;
}

}  // namespace abel
