#pragma once

#include <cstddef>
#include <vector>

#include "boxhunt/strategy.hpp"

namespace boxhunt {

// Piecewise-bilinear function on a rectangular grid; values live in [0,1].
struct GridFunction {
  std::vector<double> xs;  // strictly increasing
  std::vector<double> ts;  // strictly increasing
  std::vector<double> v;   // row-major: value(i,j) = f(xs[i], ts[j])

  std::size_t nx() const { return xs.size(); }
  std::size_t nt() const { return ts.size(); }
  double value(std::size_t i, std::size_t j) const { return v[i * nt() + j]; }
  double& value(std::size_t i, std::size_t j) { return v[i * nt() + j]; }

  // Bilinear interpolation; arguments must lie inside the grid rectangle
  // (up to a hair of rounding slack).
  double eval(double x, double t) const;
};

// zoom_{a,b} f (x, t) = f(x/a, t/b): same values on scaled axes, exactly.
GridFunction zoom(const GridFunction& f, double a, double b);

// integral over x of (1 - f(x, t)) at fixed t (trapezoid; exact for the
// bilinear interpolant). t must lie inside the grid's t-range.
double column_integral(const GridFunction& f, double t);

// (1/(x-extent)) * integral of (1/x) f(x,t)^k over the grid rectangle.
// Per x-cell Gauss nodes at fixed in-cell fractions; the t-integral of the
// (linear) interpolant raised to k is evaluated analytically per segment, so
// the result scales exactly under zoom. Cells are independent; partials are
// reduced in cell order (parallel driver is bit-identical to serial).
double theta_of_grid(const GridFunction& f, int k, Exec exec = Exec::parallel);

}  // namespace boxhunt
