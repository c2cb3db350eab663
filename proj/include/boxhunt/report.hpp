#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxhunt/strategy.hpp"

namespace boxhunt {

enum class ReportMode { exact, montecarlo };

struct PerBoxStat {
  std::int64_t x = 0;
  double expected_time = 0;  // E[T_x] (exact) or bucketed mean find time (MC)
  double theta_x = 0;        // expected_time / x

  friend bool operator==(const PerBoxStat&, const PerBoxStat&) = default;
};

// One experiment's result. `theta` is the inverse speed-up
// (1/m) * sum_x (1/x) E[T_x]; speedup_inv_theta = 1/theta is what bound
// comparisons use; speedup_mean = (1/m) * sum_x x/E[T_x] is reported alongside
// (Jensen puts it at or above 1/theta).
struct SpeedupReport {
  StrategyId strategy = StrategyId::Trivial;
  int k = 1;           // number of searchers (the exponent on the matrix)
  std::int64_t m = 0;  // effective box count
  ReportMode mode = ReportMode::exact;
  NumericMode numeric_mode = NumericMode::float64;  // exact engine only

  double theta = 0;
  double speedup_inv_theta = 0;
  std::optional<double> speedup_mean;  // absent when MC lacks per-x buckets

  // exact-rational engine: the same three values in lowest terms
  std::optional<std::string> theta_exact;
  std::optional<std::string> speedup_inv_theta_exact;
  std::optional<std::string> speedup_mean_exact;

  // Monte Carlo provenance
  std::optional<double> stderr_value;
  std::optional<std::int64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> not_found;   // trials that hit max_steps / exhaustion
  std::optional<double> found_fraction;    // crash experiments
  bool incomplete = false;                 // true -> theta is over found trials only

  std::optional<double> bound;  // strategy's reference speed-up bound
  std::optional<double> ratio;  // speedup_inv_theta / bound
  std::optional<std::string> bound_kind;

  std::optional<std::vector<PerBoxStat>> per_x;

  friend bool operator==(const SpeedupReport&, const SpeedupReport&) = default;
};

// Stable 12-column schema; missing fields are empty, never dropped columns.
// In the exact-rational engine theta/speedup columns carry exact fractions.
std::string csv_header();
std::string csv_row(const SpeedupReport& r);

std::string to_json_string(const SpeedupReport& r);
std::string reports_to_json_string(const std::vector<SpeedupReport>& rs);
SpeedupReport report_from_json_string(const std::string& text);

const char* report_mode_name(ReportMode m);
std::string format_double(double v);  // shortest round-trip decimal

}  // namespace boxhunt
