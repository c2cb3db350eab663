#include "boxhunt/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boxhunt/numeric.hpp"

namespace boxhunt {

namespace {

// Index of the segment [axis[i], axis[i+1]] containing u, tolerating a whisker
// of rounding outside the ends.
std::size_t locate(const std::vector<double>& axis, double u,
                   const char* what) {
  const double lo = axis.front(), hi = axis.back();
  const double slack = 1e-9 * std::max(std::abs(lo), std::abs(hi));
  if (u < lo - slack || u > hi + slack)
    throw std::out_of_range(std::string(what) +
                            " lies outside the grid range");
  if (u <= lo) return 0;
  if (u >= hi) return axis.size() - 2;
  const auto it = std::upper_bound(axis.begin(), axis.end(), u);
  return static_cast<std::size_t>(it - axis.begin()) - 1;
}

// sum_{p=0}^{k} v0^p v1^(k-p)  ( = (v1^{k+1} - v0^{k+1}) / (v1 - v0), but
// stable when v0 == v1 )
double power_sum(double v0, double v1, int k) {
  double s = 1.0, v0p = 1.0;
  for (int j = 1; j <= k; ++j) {
    v0p *= v0;
    s = s * v1 + v0p;
  }
  return s;
}

}  // namespace

double GridFunction::eval(double x, double t) const {
  if (xs.size() < 2 || ts.size() < 2)
    throw std::invalid_argument("grid needs at least 2x2 nodes");
  const std::size_t i = locate(xs, x, "x");
  const std::size_t j = locate(ts, t, "t");
  const double fx = std::clamp((x - xs[i]) / (xs[i + 1] - xs[i]), 0.0, 1.0);
  const double ft = std::clamp((t - ts[j]) / (ts[j + 1] - ts[j]), 0.0, 1.0);
  const double a = value(i, j) + fx * (value(i + 1, j) - value(i, j));
  const double b = value(i, j + 1) + fx * (value(i + 1, j + 1) - value(i, j + 1));
  return a + ft * (b - a);
}

GridFunction zoom(const GridFunction& f, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("zoom factors must be positive");
  GridFunction g;
  g.xs.reserve(f.xs.size());
  g.ts.reserve(f.ts.size());
  for (double x : f.xs) g.xs.push_back(a * x);
  for (double t : f.ts) g.ts.push_back(b * t);
  g.v = f.v;  // zoomed function takes the same values at the scaled nodes
  return g;
}

double column_integral(const GridFunction& f, double t) {
  if (f.xs.size() < 2 || f.ts.size() < 2)
    throw std::invalid_argument("grid needs at least 2x2 nodes");
  const std::size_t j = locate(f.ts, t, "t");
  const double ft =
      std::clamp((t - f.ts[j]) / (f.ts[j + 1] - f.ts[j]), 0.0, 1.0);
  KahanSum acc;
  double prev = 0.0;
  for (std::size_t i = 0; i < f.nx(); ++i) {
    const double w =
        f.value(i, j) + ft * (f.value(i, j + 1) - f.value(i, j));
    const double g = 1.0 - w;
    if (i > 0) acc.add(0.5 * (prev + g) * (f.xs[i] - f.xs[i - 1]));
    prev = g;
  }
  return acc.value();
}

double theta_of_grid(const GridFunction& f, int k, Exec exec) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (f.xs.size() < 2 || f.ts.size() < 2)
    throw std::invalid_argument("grid needs at least 2x2 nodes");
  // 4-point Gauss-Legendre on [0,1]
  static constexpr double node[4] = {
      0.5 - 0.8611363115940526 / 2, 0.5 - 0.3399810435848563 / 2,
      0.5 + 0.3399810435848563 / 2, 0.5 + 0.8611363115940526 / 2};
  static constexpr double weight[4] = {
      0.3478548451374538 / 2, 0.6521451548625461 / 2,
      0.6521451548625461 / 2, 0.3478548451374538 / 2};

  const std::int64_t ncell = static_cast<std::int64_t>(f.nx()) - 1;
  const std::size_t nt = f.nt();
  std::vector<double> cell(static_cast<std::size_t>(ncell));

  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t ic = 0; ic < ncell; ++ic) {
    const std::size_t i = static_cast<std::size_t>(ic);
    const double width = f.xs[i + 1] - f.xs[i];
    double total = 0.0;
    for (int g = 0; g < 4; ++g) {
      const double frac = node[g];
      const double xg = f.xs[i] + width * frac;
      // t-integral of (interpolated column at xg)^k, segment by segment
      double tint = 0.0;
      double v1 = f.value(i, 0) + frac * (f.value(i + 1, 0) - f.value(i, 0));
      for (std::size_t j = 1; j < nt; ++j) {
        const double v0 = v1;
        v1 = f.value(i, j) + frac * (f.value(i + 1, j) - f.value(i, j));
        tint += (f.ts[j] - f.ts[j - 1]) * power_sum(v0, v1, k) /
                static_cast<double>(k + 1);
      }
      total += weight[g] * width * tint / xg;
    }
    cell[i] = total;
  }

  KahanSum acc;
  for (const double c : cell) acc.add(c);
  return acc.value() / (f.xs.back() - f.xs.front());
}

}  // namespace boxhunt
