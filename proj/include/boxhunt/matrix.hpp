#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "boxhunt/numeric.hpp"
#include "boxhunt/rational.hpp"
#include "boxhunt/strategy.hpp"

namespace boxhunt {

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

template <class T>
T from_int(std::int64_t v) {
  if constexpr (std::is_same_v<T, Rational>)
    return Rational(static_cast<long>(v));
  else
    return static_cast<T>(v);
}

// N(x, t): probability that a single searcher following the schedule has not
// opened box x by the end of step t. Pooled schedules are stored in product
// form — per-step survival factors (1 - 1/pool_size) plus the first step at
// which each box enters the pick range — so
//   entry(x, t) = prod_{s = first_active(x) .. min(t, horizon)} factor[s],
// continued past the horizon by tail_ratio^(t - horizon) when a tail exists
// (without a tail the value at the horizon persists; for with-memory
// schedules that value is 0).
//
// PartitionCoordinated is stored as the joint 0/1 indicator of its k
// coordinated searchers: entry(x, t) = [t < ceil(x/k)]. Entries are 0/1, so
// raising them to any exponent is a no-op and the same expectation formulas
// apply.
template <class T>
struct NonVisitMatrix {
  StrategyId strategy = StrategyId::Trivial;
  std::int64_t m = 0;
  int schedule_k = 1;         // parameter the schedule was built with
  std::int64_t horizon = 0;   // explicit columns are t = 0..horizon
  std::vector<std::int64_t> range_end;  // index 1..horizon; [0] unused
  std::vector<T> factor;                // index 1..horizon; [0] unused
  std::optional<T> tail_ratio;
  std::optional<int> interleaved_k;

  static constexpr NumericMode mode() {
    return std::is_same_v<T, Rational> ? NumericMode::exact_rational
                                       : NumericMode::float64;
  }

  // Smallest step whose range covers x (for the interleaved baseline: the
  // step at which x is opened). Rows with equal first_active_step are equal.
  std::int64_t first_active_step(std::int64_t x) const {
    if (x < 1 || x > m) throw std::out_of_range("box index out of range");
    if (interleaved_k) return ceil_div(x, *interleaved_k);
    auto it = std::lower_bound(range_end.begin() + 1, range_end.end(), x);
    if (it == range_end.end())
      throw std::logic_error("schedule never reaches box " + std::to_string(x));
    return it - range_end.begin();
  }

  T entry(std::int64_t x, std::int64_t t) const {
    if (t < 0) throw std::out_of_range("time index must be >= 0");
    const std::int64_t t0 = first_active_step(x);
    if (interleaved_k) return from_int<T>(t < t0 ? 1 : 0);
    T v = from_int<T>(1);
    for (std::int64_t s = t0; s <= std::min(t, horizon); ++s) {
      v *= factor[s];
      if (is_zero(v)) return v;
    }
    if (t > horizon && tail_ratio)
      v *= ipow(*tail_ratio, static_cast<unsigned>(t - horizon));
    return v;
  }

  // Maximal runs of consecutive boxes sharing a row.
  struct RowBlock {
    std::int64_t x_lo = 0, x_hi = 0, t0 = 0;
  };
  std::vector<RowBlock> row_blocks() const {
    std::vector<RowBlock> blocks;
    if (interleaved_k) {
      const int k = *interleaved_k;
      for (std::int64_t i = 1; (i - 1) * k < m; ++i)
        blocks.push_back({(i - 1) * k + 1, std::min<std::int64_t>(i * k, m), i});
      return blocks;
    }
    std::int64_t covered = 0;
    for (std::int64_t t = 1; t <= horizon && covered < m; ++t) {
      if (range_end[t] > covered) {
        blocks.push_back({covered + 1, range_end[t], t});
        covered = range_end[t];
      }
    }
    if (covered < m)
      throw std::logic_error("schedule does not cover all boxes");
    return blocks;
  }
};

using NonVisitMatrixQ = NonVisitMatrix<Rational>;
using NonVisitMatrixD = NonVisitMatrix<double>;

struct BuildOptions {
  // Exact-rational cost guard; raise deliberately when a cheap matrix (e.g.
  // Trivial's 0/1 entries) is wanted at larger m.
  std::int64_t rational_m_limit = 512;
};

template <class T>
NonVisitMatrix<T> build_matrix(const SelectionSchedule& sched,
                               const BuildOptions& opts = {}) {
  if constexpr (std::is_same_v<T, Rational>) {
    if (sched.m > opts.rational_m_limit)
      throw std::domain_error(
          "exact_rational mode is configured for m <= " +
          std::to_string(opts.rational_m_limit) +
          "; use float64 mode for larger m (or raise the limit)");
  }
  NonVisitMatrix<T> M;
  M.strategy = sched.strategy;
  M.m = sched.m;
  M.schedule_k = sched.k;

  if (sched.interleaved_k) {
    M.interleaved_k = *sched.interleaved_k;
    M.horizon = ceil_div(sched.m, *sched.interleaved_k);
    return M;
  }

  const std::int64_t H = static_cast<std::int64_t>(sched.entries.size());
  M.horizon = H;
  M.range_end.assign(H + 1, 0);
  M.factor.assign(H + 1, from_int<T>(1));
  for (std::int64_t t = 1; t <= H; ++t) {
    const ScheduleEntry& e = sched.entries[t - 1];
    if (e.pool_size < 1)
      throw std::invalid_argument("schedule entry with empty pool");
    if (t > 1 && e.range_end < M.range_end[t - 1])
      throw std::invalid_argument("schedule ranges must be non-decreasing");
    M.range_end[t] = e.range_end;
    if constexpr (std::is_same_v<T, Rational>)
      M.factor[t] = Rational(static_cast<long>(e.pool_size - 1),
                             static_cast<long>(e.pool_size));
    else
      M.factor[t] = static_cast<double>(e.pool_size - 1) /
                    static_cast<double>(e.pool_size);
  }
  if (sched.tail_pool_size) {
    const std::int64_t p = *sched.tail_pool_size;
    if constexpr (std::is_same_v<T, Rational>)
      M.tail_ratio = Rational(static_cast<long>(p - 1), static_cast<long>(p));
    else
      M.tail_ratio = static_cast<double>(p - 1) / static_cast<double>(p);
  }
  return M;
}

}  // namespace boxhunt
