#include "abel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "abel/counting.hpp"

namespace abel {

ControlGrid ControlGrid::uniform(double T, std::size_t N, std::vector<std::vector<double>> samples,
                                 std::optional<double> M_override) {
  if (!(T > 0)) throw std::invalid_argument("grid horizon T must be positive");
  if (N < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (samples.empty()) throw std::invalid_argument("grid needs at least the u_0 samples");
  ControlGrid g;
  g.T = T;
  g.N = N;
  g.t.resize(N);
  for (std::size_t j = 0; j < N; ++j) g.t[j] = T * static_cast<double>(j) / static_cast<double>(N - 1);
  double observed = 0.0;
  for (const auto& row : samples) {
    if (row.size() != N) throw std::invalid_argument("control sample length does not match the grid");
    for (double x : row) {
      if (!std::isfinite(x)) throw std::invalid_argument("control sample is not finite");
      observed = std::max(observed, std::abs(x));
    }
  }
  g.u = std::move(samples);
  if (M_override) {
    if (*M_override < observed)
      throw std::invalid_argument("M override is smaller than an observed |u_i| sample");
    g.M = *M_override;
  } else {
    g.M = observed;
  }
  return g;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& f, double h) {
  std::vector<double> F(f.size());
  if (f.empty()) return F;
  F[0] = 0.0;
  for (std::size_t j = 1; j < f.size(); ++j) F[j] = F[j - 1] + 0.5 * h * (f[j - 1] + f[j]);
  return F;
}

std::vector<double> iterated_integral(const Word& v, const ControlGrid& g) {
  for (Letter b : v.letters())
    if (!g.letter_valid(b)) throw std::invalid_argument("word letter outside the grid alphabet");
  std::vector<double> f(g.N, 1.0);
  const double h = g.step();
  std::vector<double> integrand(g.N);
  for (Letter b : v.letters()) {
    const auto& ub = g.u[b];
    for (std::size_t j = 0; j < g.N; ++j) integrand[j] = f[j] * ub[j];
    f = cumulative_trapezoid(integrand, h);
  }
  return f;
}

namespace {

std::vector<double> zeros(std::size_t n) { return std::vector<double>(n, 0.0); }

void accumulate_partial(ExpansionTable& table, std::size_t N) {
  table.partial = zeros(N);
  for (int k = 1; k <= table.K; ++k)
    for (std::size_t j = 0; j < N; ++j) table.partial[j] += table.phi[static_cast<std::size_t>(k)][j];
}

}  // namespace

ExpansionTable evaluate_series(const GradedSeries& Z, const ControlGrid& g) {
  ExpansionTable table;
  table.K = Z.truncation_order();
  table.phi.assign(static_cast<std::size_t>(table.K) + 1, {});
  for (int k = 1; k <= table.K; ++k) {
    auto acc = zeros(g.N);
    for (const auto& [w, c] : Z.part(k).terms()) {
      const double coeff = to_double(c);
      const auto values = iterated_integral(w, g);
      for (std::size_t j = 0; j < g.N; ++j) acc[j] += coeff * values[j];
    }
    table.phi[static_cast<std::size_t>(k)] = std::move(acc);
  }
  accumulate_partial(table, g.N);
  return table;
}

ExpansionTable expansion_via_products(const EquationSpec& spec, const ControlGrid& g, int K,
                                      int guard) {
  if (K < 1) throw std::invalid_argument("expansion_via_products needs K >= 1");
  if (K > guard)
    throw OrderGuardExceeded("truncation order " + std::to_string(K) + " exceeds guard " +
                             std::to_string(guard));
  const int n = spec.n;
  if (g.alphabet_degree() < n) throw std::invalid_argument("grid does not carry n+1 controls");

  ExpansionTable table;
  table.K = K;
  table.phi.assign(static_cast<std::size_t>(K) + 1, {});
  table.integrals_per_order.assign(static_cast<std::size_t>(K) + 1, 0);
  const double h = g.step();

  table.phi[1] = cumulative_trapezoid(g.u[0], h);
  table.integrals_per_order[1] = 1;

  // ordered multi-indices l_1 <= ... <= l_i, parts >= 1, sum k — one
  // quadrature each, weighted by the rearrangement count R(l)
  std::vector<double> factor(g.N), integrand(g.N);
  for (int k = 1; k + 1 <= K; ++k) {
    auto next = zeros(g.N);
    std::size_t integrals = 0;
    std::vector<int> parts;
    auto emit = [&](int i) {
      // R(l) = i! / prod over values of mult!
      Integer r = factorial(static_cast<unsigned>(i));
      int run = 1;
      for (std::size_t m = 1; m <= parts.size(); ++m) {
        if (m < parts.size() && parts[m] == parts[m - 1]) {
          ++run;
        } else {
          r /= factorial(static_cast<unsigned>(run));
          run = 1;
        }
      }
      const double weight =
          to_double(Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)) * r));
      std::fill(factor.begin(), factor.end(), 1.0);
      for (int l : parts) {
        const auto& phi_l = table.phi[static_cast<std::size_t>(l)];
        for (std::size_t j = 0; j < g.N; ++j) factor[j] *= phi_l[j];
      }
      const auto& ui = g.u[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < g.N; ++j) integrand[j] = factor[j] * ui[j];
      const auto F = cumulative_trapezoid(integrand, h);
      for (std::size_t j = 0; j < g.N; ++j) next[j] += weight * F[j];
      ++integrals;
    };
    auto recurse = [&](auto&& self, int minimum, int remaining) -> void {
      const int i = static_cast<int>(parts.size()) + 1;
      if (i > n) return;
      for (int l = minimum; l <= remaining; ++l) {
        parts.push_back(l);
        if (l == remaining) emit(i);
        self(self, l, remaining - l);
        parts.pop_back();
      }
    };
    recurse(recurse, 1, k);
    table.phi[static_cast<std::size_t>(k) + 1] = std::move(next);
    table.integrals_per_order[static_cast<std::size_t>(k) + 1] = integrals;
  }

  accumulate_partial(table, g.N);
  table.bound = remainder_bound(spec, g, K);
  return table;
}

std::vector<double> remainder_bound(const EquationSpec& spec, const ControlGrid& g, int K) {
  if (K < 0) throw std::invalid_argument("remainder_bound needs K >= 0");
  const int n = spec.n;
  const RadiusReport radius = convergence_radius(spec, g.M, g.T);
  std::vector<double> bound(g.N, 0.0);
  constexpr double kTinyTerm = 1e-18;
  constexpr int kMaxTail = 100000;
  for (std::size_t j = 0; j < g.N; ++j) {
    const double time = g.t[j];
    if (time == 0.0) continue;
    if (n >= 2 && !(time < radius.radius)) {
      bound[j] = std::numeric_limits<double>::infinity();
      continue;
    }
    // term_k = |T_n^k| (M t)^k / k!; the term ratio ((n-1)k+1) M t / (k+1)
    // is monotone in k with limit (n-1) M t < 1 inside the radius, so the
    // tail converges and the stopped sum can be closed geometrically.
    double term = 1.0;
    for (int k = 1; k <= K + 1; ++k)
      term *= (static_cast<double>(n - 1) * (k - 1) + 1.0) * g.M * time / static_cast<double>(k);
    double tail = 0.0;
    double ratio = 0.0;
    for (int k = K + 1; k <= K + kMaxTail; ++k) {
      tail += term;
      ratio = (static_cast<double>(n - 1) * k + 1.0) * g.M * time / static_cast<double>(k + 1);
      term *= ratio;
      if (term < kTinyTerm && term < 1e-16 * std::max(tail, 1.0)) break;
    }
    // ratios increase toward (n-1) M t for n >= 2 and decrease otherwise
    const double ratio_sup = n >= 2 ? static_cast<double>(n - 1) * g.M * time : ratio;
    bound[j] = ratio_sup < 1.0 ? tail + term * ratio_sup / (1.0 - ratio_sup)
                               : std::numeric_limits<double>::infinity();
  }
  return bound;
}

RadiusReport convergence_radius(const EquationSpec& spec, double M, double T) {
  if (M < 0) throw std::invalid_argument("convergence_radius needs M >= 0");
  if (!(T > 0)) throw std::invalid_argument("convergence_radius needs T > 0");
  RadiusReport report;
  report.n = spec.n;
  report.M = M;
  report.T = T;
  if (spec.n >= 2 && M > 0)
    report.radius = std::min(T, 1.0 / (M * static_cast<double>(spec.n - 1)));
  else
    report.radius = T;
  return report;
}

double homomorphism_check(const Word& v, const Word& w, const ControlGrid& g) {
  const NCPolynomial both = shuffle(NCPolynomial::monomial(v), NCPolynomial::monomial(w));
  auto lhs = zeros(g.N);
  for (const auto& [word, c] : both.terms()) {
    const double coeff = to_double(c);
    const auto values = iterated_integral(word, g);
    for (std::size_t j = 0; j < g.N; ++j) lhs[j] += coeff * values[j];
  }
  const auto fv = iterated_integral(v, g);
  const auto fw = iterated_integral(w, g);
  double deviation = 0.0;
  for (std::size_t j = 0; j < g.N; ++j) deviation = std::max(deviation, std::abs(lhs[j] - fv[j] * fw[j]));
  return deviation;
}

}  // namespace abel
