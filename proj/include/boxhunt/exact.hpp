#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "boxhunt/bounds.hpp"
#include "boxhunt/matrix.hpp"
#include "boxhunt/report.hpp"

namespace boxhunt {

namespace detail {

// E[T] for a row entering the range at step t0, with k independent searchers:
// sum_{t>=0} N(t)^k. The t < t0 prefix contributes t0 ones; a geometric tail
// of ratio r past the horizon sums to N(h)^k r^k / (1 - r^k).
template <class T>
T row_expected_time(const NonVisitMatrix<T>& M, std::int64_t t0, int k) {
  if (M.interleaved_k) return from_int<T>(t0);  // 0/1 entries: exponent moot
  T acc = from_int<T>(t0);
  T val = from_int<T>(1);
  for (std::int64_t t = t0; t <= M.horizon; ++t) {
    val *= M.factor[t];
    if (is_zero(val)) break;  // row reached zero; later terms vanish
    acc += ipow(val, static_cast<unsigned>(k));
  }
  if (M.tail_ratio && !is_zero(val)) {
    const T rk = ipow(*M.tail_ratio, static_cast<unsigned>(k));
    acc += ipow(val, static_cast<unsigned>(k)) * rk / (from_int<T>(1) - rk);
  }
  return acc;
}

}  // namespace detail

template <class T>
T expected_visit_time(const NonVisitMatrix<T>& M, std::int64_t x, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  return detail::row_expected_time(M, M.first_active_step(x), k);
}

struct ColumnViolation {
  std::int64_t t = 0;
  double column_sum = 0;
  double allowed = 0;
};

// C_N(t) = sum_x (1 - N(x,t)) <= t at every explicit column: one searcher
// opens at most one box per step. The coordinated baseline's joint matrix
// opens k boxes per step, so its budget is k*t. Exact mode compares exactly;
// float64 allows 1e-12 * m of accumulated rounding.
template <class T>
std::optional<ColumnViolation> column_requirement_check(
    const NonVisitMatrix<T>& M) {
  const std::int64_t per_step = M.interleaved_k ? *M.interleaved_k : 1;
  std::vector<T> col(static_cast<std::size_t>(M.horizon) + 1, from_int<T>(0));
  std::vector<std::int64_t> zeros_from(static_cast<std::size_t>(M.horizon) + 2,
                                       0);
  for (const auto& b : M.row_blocks()) {
    const std::int64_t count = b.x_hi - b.x_lo + 1;
    if (M.interleaved_k) {
      if (b.t0 <= M.horizon) zeros_from[b.t0] += count;
      continue;
    }
    T val = from_int<T>(1);
    for (std::int64_t t = b.t0; t <= M.horizon; ++t) {
      val *= M.factor[t];
      if (is_zero(val)) {
        zeros_from[t] += count;
        break;
      }
      col[t] += (from_int<T>(1) - val) * from_int<T>(count);
    }
  }
  std::int64_t fully_opened = 0;
  for (std::int64_t t = 0; t <= M.horizon; ++t) {
    fully_opened += zeros_from[t];
    const T column = col[t] + from_int<T>(fully_opened);
    const T allowed = from_int<T>(t * per_step);
    bool bad;
    if constexpr (std::is_same_v<T, Rational>)
      bad = column > allowed;
    else
      bad = column > allowed + 1e-12 * static_cast<double>(M.m);
    if (bad)
      return ColumnViolation{t, to_double(column),
                             static_cast<double>(t * per_step)};
  }
  return std::nullopt;
}

struct ThetaOptions {
  bool per_x = false;
  Exec exec = Exec::parallel;
};

// Inverse speed-up of k searchers sharing the schedule behind M:
//   uniform placement: theta = (1/m) sum_x (1/x) E[T_x]
//   fixed placement x: theta = E[T_x] / x
// plus speedup_mean = (1/m) sum_x x / E[T_x]. Equal rows are processed once
// per block; float64 accumulates per-block partials in a fixed order with
// compensation (the parallel driver fills the same slots, so results are
// bit-identical to the serial reference).
template <class T>
SpeedupReport theta(const NonVisitMatrix<T>& M, int k, const Placement& pl,
                    const ThetaOptions& opt = {}) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  SpeedupReport r;
  r.strategy = M.strategy;
  r.k = k;
  r.m = M.m;
  r.mode = ReportMode::exact;
  r.numeric_mode = NonVisitMatrix<T>::mode();

  constexpr bool rational = std::is_same_v<T, Rational>;

  if (!pl.uniform) {
    const std::int64_t x = pl.fixed_x;
    const T E = expected_visit_time(M, x, k);
    const T th = E / from_int<T>(x);
    const T inv = from_int<T>(1) / th;
    const T mean = from_int<T>(x) / E;
    r.theta = to_double(th);
    r.speedup_inv_theta = to_double(inv);
    r.speedup_mean = to_double(mean);
    if constexpr (rational) {
      r.theta_exact = fraction_string(th);
      r.speedup_inv_theta_exact = fraction_string(inv);
      r.speedup_mean_exact = fraction_string(mean);
    }
    if (opt.per_x)
      r.per_x = std::vector<PerBoxStat>{
          {x, to_double(E), to_double(E) / static_cast<double>(x)}};
    return r;
  }

  const auto blocks = M.row_blocks();
  const std::size_t nb = blocks.size();
  std::vector<T> block_E(nb);

  if constexpr (rational) {
    T acc_theta = from_int<T>(0), acc_mean = from_int<T>(0);
    for (std::size_t i = 0; i < nb; ++i) {
      const auto& b = blocks[i];
      block_E[i] = detail::row_expected_time(M, b.t0, k);
      T harm = from_int<T>(0), weight = from_int<T>(0);
      for (std::int64_t x = b.x_lo; x <= b.x_hi; ++x) {
        harm += from_int<T>(1) / from_int<T>(x);
        weight += from_int<T>(x);
      }
      acc_theta += block_E[i] * harm;
      acc_mean += weight / block_E[i];
    }
    const T th = acc_theta / from_int<T>(M.m);
    const T inv = from_int<T>(1) / th;
    const T mean = acc_mean / from_int<T>(M.m);
    r.theta = to_double(th);
    r.speedup_inv_theta = to_double(inv);
    r.speedup_mean = to_double(mean);
    r.theta_exact = fraction_string(th);
    r.speedup_inv_theta_exact = fraction_string(inv);
    r.speedup_mean_exact = fraction_string(mean);
  } else {
    std::vector<double> contrib_theta(nb), contrib_mean(nb);
    const bool par = opt.exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t ib = 0; ib < static_cast<std::int64_t>(nb); ++ib) {
      const auto& b = blocks[static_cast<std::size_t>(ib)];
      const double E = detail::row_expected_time(M, b.t0, k);
      double harm = 0, weight = 0;
      for (std::int64_t x = b.x_lo; x <= b.x_hi; ++x) {
        harm += 1.0 / static_cast<double>(x);
        weight += static_cast<double>(x);
      }
      block_E[static_cast<std::size_t>(ib)] = E;
      contrib_theta[static_cast<std::size_t>(ib)] = E * harm;
      contrib_mean[static_cast<std::size_t>(ib)] = weight / E;
    }
    KahanSum acc_theta, acc_mean;
    for (std::size_t i = 0; i < nb; ++i) {
      acc_theta.add(contrib_theta[i]);
      acc_mean.add(contrib_mean[i]);
    }
    r.theta = acc_theta.value() / static_cast<double>(M.m);
    r.speedup_inv_theta = 1.0 / r.theta;
    r.speedup_mean = acc_mean.value() / static_cast<double>(M.m);
  }

  if (opt.per_x) {
    std::vector<PerBoxStat> per;
    per.reserve(static_cast<std::size_t>(M.m));
    for (std::size_t i = 0; i < nb; ++i) {
      const double E = to_double(block_E[i]);
      for (std::int64_t x = blocks[i].x_lo; x <= blocks[i].x_hi; ++x)
        per.push_back({x, E, E / static_cast<double>(x)});
    }
    r.per_x = std::move(per);
  }
  return r;
}

struct BoundComparison {
  BoundValue bound;
  double ratio = 0;  // speedup_inv_theta / bound
};

// Reference bound for the report's strategy, and how much of it was achieved.
BoundComparison compare_to_bound(const SpeedupReport& r);
void attach_bound(SpeedupReport& r);

}  // namespace boxhunt
