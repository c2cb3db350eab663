#pragma once

// Continuous-domain limit of the search problem: the optimal non-visit
// profile for k searchers on the unit interval, its column-wise
// characterization, and the closed-form / quadrature evaluation of the
// resulting inverse speed-up integral.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "boxhunt/grid.hpp"
#include "boxhunt/matrix.hpp"
#include "boxhunt/numeric.hpp"
#include "boxhunt/strategy.hpp"

namespace boxhunt {

// Value of the optimal per-searcher non-visit profile at relative position
// x in (0,1] and relative time t >= 0, for k >= 2 searchers:
//   t >= 1        -> 0
//   k*t <= x      -> 1
//   t <  1/k      -> (x/(k t))^(1/(k-1))
//   otherwise     -> (k/(k-1)) (1-t) x^(1/(k-1))
// The branches agree at their boundaries, so the function is continuous on
// x in (0,1], t in [0,1].
double opt_eval(int k, double x, double t);

// Column-wise description of the optimal profile at time t: the column is
// x -> min(1, alpha * x^(1/(k-1))), rising with x and clipped at 1 from
// x = gamma on (gamma = 1 when the power law stays below 1 inside (0,1)).
struct ColumnSolution {
  double t = 0.0;
  double alpha = 0.0;  // scale of the power law
  double gamma = 0.0;  // clip point: profile == 1 exactly on [gamma, 1]
};

// The budget-optimal column for time t (fraction of the interval swept
// per searcher equals t, per unit time).
ColumnSolution column_optimizer(int k, double t);

// Evaluate a ColumnSolution at position x in (0,1].
double column_solution_value(const ColumnSolution& s, int k, double x);

struct SmallFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Closed-form value of the inverse speed-up integral
//   theta(k) = int_0^1 (1/x) int_0^inf opt(k,x,t)^k dt dx
// split by the region of the (x,t) plane that dominates each piece:
//   region_partial : power-law columns not yet clipped   -> (k-1)/k^2
//   region_clipped : the all-ones part of each column    -> 1/k
//   region_late    : t in [1/k, 1], linear-decay columns -> (k-1)^2/(k^2 (k+1))
//   total = (3k-1)/(k (k+1))
struct ClosedFormTheta {
  SmallFraction region_partial;
  SmallFraction region_clipped;
  SmallFraction region_late;
  SmallFraction total;
};

ClosedFormTheta theta_integral_closed_form(int k);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Numerical evaluation of the same integral: the t-integral is done
// analytically per branch, leaving a 1-d integral over x in (0,1] handled
// with adaptive Simpson panels.  eps is the left cutoff (the discarded
// integrand mass on [0,eps] is bounded by eps and added to the error
// estimate).  Throws std::runtime_error if the requested tolerance cannot
// be certified.
QuadratureResult theta_integral_quadrature(int k, double tol = 1e-9,
                                           double eps = 1e-6,
                                           Exec exec = Exec::parallel);

// Sample the optimal profile onto a grid suitable for GridFunction-based
// experiments (zoom laws, column integrals, theta evaluation).
struct OptGridOptions {
  std::size_t nx_log = 768;  // geometric x nodes on [x_min, 1]
  std::size_t nx_lin = 768;  // linear x nodes on [x_min, 1]
  std::size_t nt = 1536;     // linear t nodes on [0, t_max]
  double x_min = 1e-6;
  double t_max = 1.5;
};

GridFunction sample_opt_grid(int k, const OptGridOptions& opts = {});

// Embed a discrete non-visit matrix as a piecewise-bilinear GridFunction on
// [1, m+1] x [0, T_end]: box x owns the x-slab [x, x+1), step t owns the
// t-slab [t, t+1), and near-vertical ramps of width `ramp` keep the
// function continuous.  Matrices with a geometric tail are truncated at the
// step where every remaining row value falls below tail_epsilon;
// truncation_error bounds the discarded contribution to theta (per-box
// average of (1/x) * tail sum).
struct EmbeddedMatrix {
  GridFunction grid;
  double truncation_error = 0.0;
};

template <typename T>
EmbeddedMatrix embed_matrix(const NonVisitMatrix<T>& M, double ramp = 1e-6,
                            double tail_epsilon = 1e-9);

// --- implementation of the template ---------------------------------------

template <typename T>
EmbeddedMatrix embed_matrix(const NonVisitMatrix<T>& M, double ramp,
                            double tail_epsilon) {
  using RowBlock = typename NonVisitMatrix<T>::RowBlock;
  const std::int64_t m = M.m;
  std::int64_t t_end = M.horizon;
  double tail_r = 0.0;
  if (M.tail_ratio) {
    tail_r = to_double(*M.tail_ratio);
    // Largest value still alive at the horizon, over all rows.
    double max_row = 0.0;
    for (const RowBlock& blk : M.row_blocks()) {
      double val = 1.0;
      for (std::int64_t t = blk.t0; t <= M.horizon; ++t)
        val *= to_double(M.factor[static_cast<std::size_t>(t)]);
      max_row = std::max(max_row, val);
    }
    if (max_row > tail_epsilon && tail_r > 0.0 && tail_r < 1.0) {
      const double extra =
          std::ceil(std::log(tail_epsilon / max_row) / std::log(tail_r));
      if (extra > 0) t_end += static_cast<std::int64_t>(extra);
    }
  }

  EmbeddedMatrix out;
  GridFunction& g = out.grid;

  // x-axis: 1, 2-ramp, 2, 3-ramp, 3, ..., m+1-ramp, m+1  (2m+1 nodes)
  g.xs.reserve(static_cast<std::size_t>(2 * m + 1));
  g.xs.push_back(1.0);
  for (std::int64_t x = 2; x <= m + 1; ++x) {
    g.xs.push_back(static_cast<double>(x) - ramp);
    g.xs.push_back(static_cast<double>(x));
  }
  // t-axis: 0, then (j+1-ramp, j+1) for j = 0..t_end  (2 t_end + 3 nodes)
  g.ts.reserve(static_cast<std::size_t>(2 * (t_end + 1) + 1));
  g.ts.push_back(0.0);
  for (std::int64_t j = 0; j <= t_end; ++j) {
    g.ts.push_back(static_cast<double>(j + 1) - ramp);
    g.ts.push_back(static_cast<double>(j + 1));
  }

  const std::size_t nx = g.xs.size(), nt = g.ts.size();
  g.v.assign(nx * nt, 0.0);

  // Row values N(x, t) for t = 0..t_end, streamed per block.
  std::vector<double> row(static_cast<std::size_t>(t_end) + 1);
  KahanSum trunc;
  for (const RowBlock& blk : M.row_blocks()) {
    double val = 1.0;
    for (std::int64_t t = 0; t <= t_end; ++t) {
      if (t >= blk.t0) {
        if (M.interleaved_k)
          val = 0.0;  // joint 0/1 indicator: opened exactly at step t0
        else if (t <= M.horizon)
          val *= to_double(M.factor[static_cast<std::size_t>(t)]);
        else
          val *= tail_r;
      }
      row[static_cast<std::size_t>(t)] = val;
    }
    if (M.tail_ratio && tail_r > 0.0 && tail_r < 1.0 && val > 0.0) {
      const double tail_sum = val * tail_r / (1.0 - tail_r);
      for (std::int64_t x = blk.x_lo; x <= blk.x_hi; ++x)
        trunc.add(tail_sum / static_cast<double>(x));
    }
    for (std::int64_t x = blk.x_lo; x <= blk.x_hi; ++x) {
      // x-slab [x, x+1): node indices 2(x-1) (left edge) and 2x-1 (x+1-ramp).
      const std::size_t ia = static_cast<std::size_t>(2 * (x - 1));
      const std::size_t ib = static_cast<std::size_t>(2 * x - 1);
      for (std::int64_t t = 0; t <= t_end; ++t) {
        const double w = row[static_cast<std::size_t>(t)];
        // t-slab [t, t+1): node indices 2t (slab start) and 2t+1 (end-ramp).
        const std::size_t ja = static_cast<std::size_t>(2 * t);
        const std::size_t jb = ja + 1;
        g.v[ia * nt + ja] = w;
        g.v[ia * nt + jb] = w;
        g.v[ib * nt + ja] = w;
        g.v[ib * nt + jb] = w;
      }
    }
  }
  // The closing x node (at m+1) belongs to no slab; give it the top box's
  // row so the grid is flat across the last ramp instead of dipping to 0
  // over a measure-`ramp` sliver of boxes that do not exist.
  for (std::size_t j = 0; j < nt; ++j)
    g.v[(nx - 1) * nt + j] = g.v[(nx - 2) * nt + j];
  out.truncation_error = trunc.value() / static_cast<double>(m);
  return out;
}

}  // namespace boxhunt
