#include "boxhunt/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "boxhunt/numeric.hpp"

namespace boxhunt {

namespace {

void require_k_at_least_2(int k) {
  if (k < 2)
    throw std::invalid_argument(
        "the continuous profile is defined for k >= 2");
}

}  // namespace

double opt_eval(int k, double x, double t) {
  require_k_at_least_2(k);
  if (!(x > 0.0) || x > 1.0)
    throw std::domain_error("x must lie in (0, 1]");
  if (t < 0.0) throw std::domain_error("t must be >= 0");
  if (t >= 1.0) return 0.0;
  const double e = 1.0 / (k - 1);
  if (k * t <= x) return 1.0;
  if (t < 1.0 / k) return std::pow(x / (k * t), e);
  return (static_cast<double>(k) / (k - 1)) * (1.0 - t) * std::pow(x, e);
}

ColumnSolution column_optimizer(int k, double t) {
  require_k_at_least_2(k);
  if (t < 0.0) throw std::domain_error("t must be >= 0");
  if (t >= 1.0) return {t, 0.0, 1.0};
  if (t < 1.0 / k)
    return {t, std::pow(k * t, -1.0 / (k - 1)), k * t};
  return {t, (static_cast<double>(k) / (k - 1)) * (1.0 - t), 1.0};
}

double column_solution_value(const ColumnSolution& s, int k, double x) {
  require_k_at_least_2(k);
  if (!(x > 0.0) || x > 1.0)
    throw std::domain_error("x must lie in (0, 1]");
  if (s.alpha == 0.0) return 0.0;
  return std::min(1.0, s.alpha * std::pow(x, 1.0 / (k - 1)));
}

ClosedFormTheta theta_integral_closed_form(int k) {
  require_k_at_least_2(k);
  const auto frac = [](std::int64_t n, std::int64_t d) {
    const std::int64_t g = std::gcd(n, d);
    return SmallFraction{n / g, d / g};
  };
  const std::int64_t K = k;
  ClosedFormTheta out;
  out.region_partial = frac(K - 1, K * K);
  out.region_clipped = frac(1, K);
  out.region_late = frac((K - 1) * (K - 1), K * K * (K + 1));
  out.total = frac(3 * K - 1, K * (K + 1));
  return out;
}

namespace {

// One-dimensional integrand for theta(k) with the t-integral of
// opt(k, x, .)^k done analytically per branch and the 1/x weight applied.
// With e = 1/(k-1) and c = k/(k-1):
//   A = 1/k                            (all-ones branch, t in [0, x/k])
//   B = ((k-1)/x) (x/k)^c ((x/k)^{-e} - k^e)
//                                      (power-law branch, t in [x/k, 1/k])
//   C = x^{c-1} ((k-1)/k) / (k+1)      (linear-decay branch, t in [1/k, 1])
// A + B + C simplifies to 1 - x^{c-1} (k-1)/(k+1), so the integrand is
// smooth, bounded by 1, and integrates to (3k-1)/(k(k+1)) on [0, 1].
double theta_x_integrand(int k, double x) {
  const double e = 1.0 / (k - 1);
  const double c = static_cast<double>(k) / (k - 1);
  const double A = 1.0 / k;
  const double B = ((k - 1) / x) * std::pow(x / k, c) *
                   (std::pow(x / k, -e) - std::pow(static_cast<double>(k), e));
  const double C =
      std::pow(x, c - 1.0) * (static_cast<double>(k - 1) / k) / (k + 1);
  return A + B + C;
}

struct SimpsonState {
  double value = 0.0;
  double error = 0.0;
};

// Adaptive Simpson on [a, b] with prior evaluations fa, fm, fb at a,
// midpoint, b; whole = Simpson estimate over [a, b].
void adaptive_simpson(int k, double a, double b, double fa, double fm,
                      double fb, double whole, double tol, int depth,
                      SimpsonState& st) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = theta_x_integrand(k, lm);
  const double frm = theta_x_integrand(k, rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    st.value += left + right + delta / 15.0;
    st.error += std::abs(delta) / 15.0;
    return;
  }
  adaptive_simpson(k, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, st);
  adaptive_simpson(k, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, st);
}

SimpsonState integrate_panel(int k, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = theta_x_integrand(k, a);
  const double fm = theta_x_integrand(k, m);
  const double fb = theta_x_integrand(k, b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  SimpsonState st;
  adaptive_simpson(k, a, b, fa, fm, fb, whole, tol, 40, st);
  return st;
}

}  // namespace

QuadratureResult theta_integral_quadrature(int k, double tol, double eps,
                                           Exec exec) {
  require_k_at_least_2(k);
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (!(eps > 0.0) || eps >= 0.125)
    throw std::invalid_argument("eps must lie in (0, 0.125)");

  // Fixed panel edges: geometric refinement from eps up to 0.125 (the
  // integrand's curvature concentrates near 0), then linear panels to 1.
  std::vector<double> edges;
  edges.push_back(eps);
  for (double a = eps; a < 0.125;) {
    a = std::min(a * 2.0, 0.125);
    edges.push_back(a);
  }
  const int linear_panels = 14;
  for (int i = 1; i <= linear_panels; ++i)
    edges.push_back(0.125 + (1.0 - 0.125) * i / linear_panels);

  const std::int64_t n = static_cast<std::int64_t>(edges.size()) - 1;
  std::vector<SimpsonState> panel(static_cast<std::size_t>(n));
  const double per_panel_tol = tol / (2.0 * static_cast<double>(n));

  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t i = 0; i < n; ++i)
    panel[static_cast<std::size_t>(i)] = integrate_panel(
        k, edges[static_cast<std::size_t>(i)],
        edges[static_cast<std::size_t>(i) + 1], per_panel_tol);

  KahanSum value, err;
  for (const SimpsonState& st : panel) {
    value.add(st.value);
    err.add(st.error);
  }
  // Discarded mass on [0, eps]: the integrand is <= 1 there.
  const double discard = eps;
  const double total_err = err.value() + discard;
  if (err.value() > tol)
    throw std::runtime_error(
        "quadrature could not certify the requested tolerance (achieved " +
        std::to_string(err.value()) + ")");
  return {value.value(), total_err};
}

GridFunction sample_opt_grid(int k, const OptGridOptions& opts) {
  require_k_at_least_2(k);
  if (opts.nx_log < 2 || opts.nx_lin < 2 || opts.nt < 2)
    throw std::invalid_argument("grid options need at least 2 nodes per axis");
  if (!(opts.x_min > 0.0) || opts.x_min >= 1.0)
    throw std::invalid_argument("x_min must lie in (0, 1)");
  if (!(opts.t_max >= 1.0))
    throw std::invalid_argument("t_max must be >= 1");

  GridFunction g;
  // x-axis: geometric nodes (resolving the power law near 0) merged with
  // linear nodes.
  std::vector<double> xs;
  const double lr = std::log(1.0 / opts.x_min);
  for (std::size_t i = 0; i < opts.nx_log; ++i)
    xs.push_back(opts.x_min *
                 std::exp(lr * static_cast<double>(i) /
                          static_cast<double>(opts.nx_log - 1)));
  for (std::size_t i = 0; i < opts.nx_lin; ++i)
    xs.push_back(opts.x_min + (1.0 - opts.x_min) * static_cast<double>(i) /
                                  static_cast<double>(opts.nx_lin - 1));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(),
                       [](double a, double b) {
                         return std::abs(a - b) <= 1e-15 * std::max(a, b);
                       }),
           xs.end());
  g.xs = std::move(xs);

  // t-axis: linear nodes on [0, t_max], geometric nodes resolving the blowup
  // of the power-law branch near t = 0, and the branch corners 1/k and 1.
  std::vector<double> ts;
  for (std::size_t i = 0; i < opts.nt; ++i)
    ts.push_back(opts.t_max * static_cast<double>(i) /
                 static_cast<double>(opts.nt - 1));
  const std::size_t ngeo = opts.nt / 4;
  const double t_lo = 1e-6, t_hi = 1.0 / k;
  const double tlr = std::log(t_hi / t_lo);
  for (std::size_t i = 0; i < ngeo; ++i)
    ts.push_back(t_lo * std::exp(tlr * static_cast<double>(i) /
                                 static_cast<double>(ngeo - 1)));
  ts.push_back(1.0 / k);
  ts.push_back(1.0);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end(),
                       [](double a, double b) {
                         return std::abs(a - b) <=
                                1e-15 * std::max(std::abs(a), std::abs(b)) ||
                                (a == 0.0 && b == 0.0);
                       }),
           ts.end());
  g.ts = std::move(ts);

  g.v.resize(g.nx() * g.nt());
  for (std::size_t i = 0; i < g.nx(); ++i)
    for (std::size_t j = 0; j < g.nt(); ++j)
      g.v[i * g.nt() + j] = opt_eval(k, g.xs[i], g.ts[j]);
  return g;
}

}  // namespace boxhunt
